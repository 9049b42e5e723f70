// spb — sphere-packing and liar-game bound calculator.
//
// Exit codes: 0 success, 1 infeasibility finding (e.g. inconclusive game),
// 2 internal inconsistency detected by `verify`, 64 usage error.

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulam/bounds.hpp"
#include "ulam/combinatorics.hpp"
#include "ulam/game.hpp"
#include "ulam/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;

// key=value config file, '#' comments. Values act as defaults: flags beat
// SPB_* environment variables, which beat the file.
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        size_t eq = line.find('=', start);
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + line);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string()
                                          : s.substr(a, b - a + 1);
        };
        kv[trim(line.substr(start, eq - start))] = trim(line.substr(eq + 1));
    }
    return kv;
}

struct Layered {
    CLI::Option* opt;
    std::string key;  // config-file key (the long option name)
    std::string env;  // environment variable
};

int cmd_bound(long long m, int t, bool show_k, int n_override) {
    int spb = ulam::spb_min_length(m, t);
    int nb = ulam::new_bound_min_length(m, t);
    std::cout << "m=" << m << " t=" << t << " spb_n=" << spb << " new_n=" << nb
              << (nb > spb ? " improved" : "") << "\n";
    if (show_k) {
        int lo = (n_override >= 0) ? n_override : spb;
        int hi = (n_override >= 0) ? n_override : nb;
        for (int n = lo; n <= hi; ++n) {
            ulam::KSequence seq = ulam::k_sequence(n, m, t);
            std::cout << "n=" << n << " K=";
            for (size_t i = 0; i < seq.values.size(); ++i)
                std::cout << (i ? "," : "") << seq.values[i].str();
            ulam::Theorem2Result r = ulam::theorem2_check(n, m, t);
            if (r.feasible)
                std::cout << " feasible\n";
            else
                std::cout << " violation at i=" << r.violating_index << " ("
                          << r.k_value.str() << " > " << r.capacity.str()
                          << ")\n";
        }
    }
    return kExitOk;
}

int cmd_sweep(long long m_min, long long m_max, const std::vector<int>& t_list,
              const std::string& out_path) {
    std::vector<ulam::BoundResult> rows = ulam::sweep(m_min, m_max, t_list);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    *out << "m,t,spb_n,new_n,improved\n";
    for (const auto& r : rows)
        *out << r.m << ',' << r.t << ',' << r.spb_n << ',' << r.new_n << ','
             << (r.improved ? 1 : 0) << '\n';
    return kExitOk;
}

int cmd_game(int m, int t, int n, const std::string& script_path, bool auto_play,
             const std::string& out_path) {
    ulam::GameParams params{m, t, n};
    ulam::GameTrace trace;
    if (auto_play) {
        trace = ulam::run_game(params, ulam::balanced_questioner_strategy(),
                               ulam::max_weight_answerer_strategy());
    } else {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "error: cannot read script " << script_path << "\n";
            return kExitUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        ulam::GameScript script = ulam::parse_script(buf.str());
        if (script.answers.empty())
            trace = ulam::run_game(params, script.questions,
                                   ulam::max_weight_answerer_strategy());
        else
            trace = ulam::run_game(params, script.questions, script.answers);
    }
    std::string text = ulam::format_trace(trace);
    if (!out_path.empty() && out_path != "-") {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        file << text;
    } else {
        std::cout << text;
    }
    return trace.conclusive ? kExitOk : kExitFinding;
}

int cmd_verify(int max_m, int max_t, int max_n, const std::string& code_path,
               int code_t) {
    ulam::OracleCaps caps;
    caps.minimax_max_m = max_m;
    caps.minimax_max_t = max_t;
    caps.minimax_max_n = max_n;
    bool ok = true;

    if (!code_path.empty()) {
        std::ifstream in(code_path);
        if (!in) {
            std::cerr << "error: cannot read code file " << code_path << "\n";
            return kExitUsage;
        }
        ulam::BinaryCode code;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            if (code.n == 0)
                code.n = static_cast<int>(line.size());
            if (static_cast<int>(line.size()) != code.n) {
                std::cerr << "error: ragged codeword lengths in " << code_path
                          << "\n";
                return kExitUsage;
            }
            std::uint32_t w = 0;
            for (char c : line)
                w = (w << 1) | static_cast<std::uint32_t>(c == '1');
            code.words.push_back(w);
        }
        bool valid = ulam::validate_code(code, code_t);
        std::cout << "check-code n=" << code.n << " m=" << code.words.size()
                  << " t=" << code_t << " -> " << (valid ? "valid" : "INVALID")
                  << "\n";
        if (!valid)
            return kExitFinding;
    }

    for (int t = 0; t <= max_t; ++t) {
        for (int m = 2; m <= max_m; ++m) {
            int nb = ulam::new_bound_min_length(m, t);
            for (int n = 0; n < nb; ++n) {
                bool consistent = true;
                if (n <= max_n) {
                    ulam::Winner w =
                        ulam::minimax_game(ulam::GameParams{m, t, n}, caps);
                    consistent = consistent && (w == ulam::Winner::Player1);
                }
                if (n <= caps.max_code_n) {
                    ulam::SearchCertificate cert =
                        ulam::code_exists(n, m, 2 * t + 1, caps);
                    consistent = consistent && !cert.exists;
                }
                std::cout << "m=" << m << " t=" << t << " n=" << n
                          << " bound=" << nb << " -> "
                          << (consistent ? "consistent" : "INCONSISTENT")
                          << "\n";
                ok = ok && consistent;
            }
        }
    }
    std::cout << (ok ? "verify: all cells consistent"
                     : "verify: INCONSISTENCY detected")
              << "\n";
    return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact sphere-packing and liar-game bounds for binary codes.\n"
        "Exit codes: 0 ok, 1 infeasibility finding, 2 inconsistency, 64 usage."};
    app.require_subcommand(1);

    long long m = 1;
    int t = 1;
    int n_override = -1;
    bool show_k = false;
    auto* bound = app.add_subcommand("bound", "Bounds for a single (m, t)");
    bound->add_option("-m,--size", m, "Code size (number of codewords)")
        ->required()
        ->check(CLI::PositiveNumber);
    bound->add_option("-t,--capability", t, "Error-correction capability")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bound->add_flag("--show-k-sequence", show_k, "Print K-sequences");
    bound->add_option("--n", n_override, "Inspect a specific length only");

    long long m_min = 1, m_max = 100000;
    std::vector<int> t_list{1, 2, 3, 4};
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "CSV bound table over a range of m");
    std::vector<Layered> layered;
    layered.push_back({sweep->add_option("--m-min", m_min, "Smallest code size"),
                       "m-min", "SPB_M_MIN"});
    layered.push_back({sweep->add_option("--m-max", m_max, "Largest code size"),
                       "m-max", "SPB_M_MAX"});
    sweep->add_option("-t,--capabilities", t_list, "Capabilities to sweep");
    sweep->add_option("-o,--output", out_path, "CSV path ('-' for stdout)");

    int gm = 3, gt = 1, gn = 5;
    std::string script_path;
    bool auto_play = false;
    std::string trace_path;
    auto* game = app.add_subcommand("game", "Replay or auto-play a liar game");
    game->add_option("-m,--symbols", gm, "Number of symbols")->required();
    game->add_option("-t,--lies", gt, "Lie budget")->required();
    game->add_option("-n,--questions", gn, "Question budget")->required();
    auto* script_opt =
        game->add_option("--script", script_path, "Question/answer script file");
    game->add_flag("--auto", auto_play,
                   "Balanced questioner vs max-weight adversary");
    game->add_option("-o,--output", trace_path, "Trace path ('-' for stdout)");

    int vmax_m = 6, vmax_t = 2, vmax_n = 10;
    std::string code_path;
    int code_t = 1;
    auto* verify =
        app.add_subcommand("verify", "Cross-check bounds against oracles");
    layered.push_back({verify->add_option("--max-m", vmax_m, "Largest m in the grid"),
                       "max-m", "SPB_VERIFY_MAX_M"});
    layered.push_back({verify->add_option("--max-t", vmax_t, "Largest t in the grid"),
                       "max-t", "SPB_VERIFY_MAX_T"});
    layered.push_back({verify->add_option("--max-n", vmax_n, "Largest n for minimax checks"),
                       "max-n", "SPB_VERIFY_MAX_N"});
    verify->add_option("--check-code", code_path,
                       "Validate a codeword file (one bit-string per line)");
    verify->add_option("--code-t", code_t, "Capability for --check-code");

    std::string config_path;
    for (auto* sub : {bound, sweep, game, verify})
        sub->add_option("--config", config_path, "Config file (key=value)");

    try {
        // The config path must be known before parsing, so pull it straight
        // from argv.
        std::map<std::string, std::string> config;
        for (int i = 1; i < argc; ++i) {
            std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc)
                config = load_config_file(argv[i + 1]);
            else if (arg.rfind("--config=", 0) == 0)
                config = load_config_file(arg.substr(9));
        }
        for (const auto& l : layered) {
            const char* from_env = std::getenv(l.env.c_str());
            if (from_env)
                l.opt->default_val(std::string(from_env));
            else if (auto it = config.find(l.key); it != config.end())
                l.opt->default_val(it->second);
        }
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (bound->parsed())
            return cmd_bound(m, t, show_k, n_override);
        if (sweep->parsed())
            return cmd_sweep(m_min, m_max, t_list, out_path);
        if (game->parsed()) {
            if (auto_play == (script_opt->count() > 0)) {
                std::cerr << "error: pick exactly one of --script and --auto\n";
                return kExitUsage;
            }
            return cmd_game(gm, gt, gn, script_path, auto_play, trace_path);
        }
        if (verify->parsed())
            return cmd_verify(vmax_m, vmax_t, vmax_n, code_path, code_t);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
