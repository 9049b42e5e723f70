#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ulam/exact_int.hpp"

namespace ulam {

/// Chips carry dense indices 0..m-1; sets are bitmasks, so m <= 64.
using ChipSet = std::uint64_t;

struct GameParams {
    int m;  // number of symbols/chips, >= 1
    int t;  // lie budget, >= 0
    int n;  // question budget, >= 0
};

/// Complete information state of the liar game: t+1 ordered bins of chips
/// (bin index = answers cast against the chip so far), the chips pushed past
/// the last bin, and the number of answers received.
struct SpencerState {
    std::vector<ChipSet> bins;  // size t + 1
    ChipSet lost = 0;
    int step = 0;

    ChipSet surviving() const {
        ChipSet s = 0;
        for (ChipSet b : bins)
            s |= b;
        return s;
    }
    int surviving_count() const;
};

struct Question {
    ChipSet chips = 0;  // the queried subset A
};

enum class Answer { No, Yes };

struct TraceStep {
    Question question;
    Answer answer;
    SpencerState state;   // state after the answer
    ExactInt weight;      // Spencer weight of that state
    bool heuristic_question = false;
};

struct GameTrace {
    GameParams params;
    std::vector<TraceStep> steps;
    bool conclusive = false;
    ChipSet survivors = 0;  // the deduced chip when conclusive
};

struct BalancedQuestion {
    Question question;
    bool heuristic;  // true when the greedy fallback was used
};

using QuestionStrategy =
    std::function<BalancedQuestion(const GameParams&, const SpencerState&)>;
using AnswerStrategy =
    std::function<Answer(const GameParams&, const SpencerState&, const Question&)>;
using QuestionSource = std::variant<std::vector<Question>, QuestionStrategy>;
using AnswerSource = std::variant<std::vector<Answer>, AnswerStrategy>;

SpencerState initial_state(const GameParams& params);

/// One state update per the bin-shift rules. "No" shifts the queried chips one
/// bin right; "Yes" shifts the complement. Chips shifted past bin t are lost.
SpencerState apply_answer(const GameParams& params, const SpencerState& state,
                          const Question& q, Answer a);

/// W(v_j) = sum over bins i of |V_i| * sphere_volume(n - j, t - i).
ExactInt spencer_weight(const GameParams& params, const SpencerState& state);

/// Weights of the Yes and No children; they always sum to the parent weight.
std::pair<ExactInt, ExactInt> weight_split(const GameParams& params,
                                           const SpencerState& state,
                                           const Question& q);

/// A question minimizing max(w_yes, w_no). Exact (exhaustive over subsets up
/// to complement equivalence) while at most exhaustive_cap chips survive;
/// greedy weight balancing beyond, flagged heuristic.
BalancedQuestion questioner_balanced(const GameParams& params,
                                     const SpencerState& state,
                                     int exhaustive_cap = 20);

/// The answer whose child state keeps the larger Spencer weight. Ties go to
/// "No", except that an answer keeping at least one chip beats one losing all.
Answer adversary_max_weight(const GameParams& params, const SpencerState& state,
                            const Question& q);

/// Plays scripted moves for their full length (at most n steps) or strategy
/// moves for exactly n steps, recording each resulting state and weight.
GameTrace run_game(const GameParams& params, const QuestionSource& questioner,
                   const AnswerSource& answerer);

/// Ready-made strategies for run_game.
QuestionStrategy balanced_questioner_strategy(int exhaustive_cap = 20);
AnswerStrategy max_weight_answerer_strategy();

/// Versioned line-oriented trace text (format "ulam-trace v1").
std::string format_trace(const GameTrace& trace);

/// Parses a script file body: one `A=<chips> answer=<Y|N>` line per step;
/// the answer field may be omitted on every line when an answer strategy is
/// supplied separately.
struct GameScript {
    std::vector<Question> questions;
    std::vector<Answer> answers;  // empty when the file carries no answers
};
GameScript parse_script(const std::string& text);

}  // namespace ulam
