// tourney_cli.cpp -- command-line front end for the tournament toolkit

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourney/cycles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/extremal.hpp"
#include "tourney/fixtures.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"

namespace {

using nlohmann::json;
using namespace tourney;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw Error("BadFile", "cannot open " + path);
    return read_stream(f);
}

// Matrix streams hold one or more 0/1 grids separated by blank lines;
// code streams hold one "T<n>:<hex>" per line.
std::vector<Tournament> parse_many(const std::string& text, const std::string& format) {
    std::vector<Tournament> out;
    if (format == "code") {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.pop_back();
            if (!line.empty()) out.push_back(decode(line));
        }
        return out;
    }
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
        if (block.find_first_of("01") != std::string::npos)
            out.push_back(from_matrix_text(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            flush();
        else
            block += line + "\n";
    }
    flush();
    return out;
}

json analysis_record(const Tournament& t) {
    const auto s = score_vector(t);
    const auto d = scc(t);
    const long long c3 = c3_direct(t);
    json rec;
    rec["code"] = encode(t).str();
    rec["n"] = t.n;
    rec["scores"] = s.raw;
    rec["scores_sorted"] = s.sorted;
    rec["c3"] = c3;
    rec["c3_from_scores"] = c3_from_scores(s);
    rec["det"] = to_string(determinant(t));
    rec["singular"] = is_singular(t);
    json sizes = json::array();
    for (size_t sz : d.sizes()) sizes.push_back(sz);
    rec["scc_sizes"] = sizes;
    rec["strong"] = d.count() == 1;
    rec["transitive"] = is_transitive(t);
    rec["regular"] = is_regular(t);
    rec["almost_regular"] = is_almost_regular(t);
    rec["upset"] = t.n >= 3 && is_upset(t);
    return rec;
}

void print_record_text(const json& rec) {
    std::cout << rec["code"].get<std::string>() << "  n=" << rec["n"]
              << "  scores=" << rec["scores_sorted"].dump() << "  C3=" << rec["c3"]
              << "  det=" << rec["det"].get<std::string>()
              << (rec["singular"].get<bool>() ? "  singular" : "  nonsingular")
              << "  scc=" << rec["scc_sizes"].dump();
    for (const char* flag : {"strong", "transitive", "regular", "almost_regular", "upset"})
        if (rec[flag].get<bool>()) std::cout << "  " << flag;
    std::cout << "\n";
}

json report_json(const VerificationReport& r, std::optional<long long> value = {},
                 std::optional<size_t> witness_count = {}) {
    json j;
    j["claim_id"] = r.claim_id;
    j["n"] = {r.n_lo, r.n_hi};
    j["status"] = r.pass ? "pass" : "fail";
    j["informational"] = r.informational;
    if (value) j["value"] = *value;
    if (witness_count) j["witness_count"] = *witness_count;
    j["witnesses"] = r.counterexamples;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

json extremal_json(const ExtremalResult& r, double elapsed_ms) {
    json j;
    j["n"] = r.n;
    j["objective"] = to_string(r.objective);
    j["value"] = r.value;
    j["witness_count"] = r.witness_count;
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(w.str());
    j["witnesses"] = ws;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::vector<int> parse_score_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of tournament matrices: 3-cycle counts, determinants, "
                 "strong components, enumeration up to isomorphism, extremal searches"};
    app.require_subcommand(1);

    std::string format = "auto", file, to_format = "code", claims = "all", score_filter;
    bool as_json = false, filter_singular = false, filter_strong = false;
    int order = 0, n_lo = 3, n_hi = 7, threads = 0;
    std::string objective;
    std::vector<std::string> inputs;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("inputs", inputs, "codes or matrix text arguments");
        sub->add_option("--file", file, "read input from a file ('-' for stdin)");
        sub->add_option("--format", format, "input format: auto|matrix|code")
            ->check(CLI::IsMember({"auto", "matrix", "code"}));
        sub->add_flag("--json", as_json, "emit machine-readable JSON records");
    };

    auto* analyze = app.add_subcommand("analyze", "full analysis record per tournament");
    add_io(analyze);

    auto* convert = app.add_subcommand("convert", "translate between matrix and code forms");
    add_io(convert);
    convert->add_option("--to", to_format, "output format: matrix|code")
        ->check(CLI::IsMember({"matrix", "code"}));

    auto* enumerate = app.add_subcommand("enumerate", "canonical codes of all iso classes");
    enumerate->add_option("n", order, "order (1..9)")->required();
    enumerate->add_flag("--singular", filter_singular, "keep singular classes only");
    enumerate->add_flag("--strong", filter_strong, "keep strongly connected classes only");
    enumerate->add_option("--score", score_filter, "keep classes with this sorted score "
                                                   "vector, e.g. 1,2,2,3,4,4,5");
    enumerate->add_option("--threads", threads, "worker threads (default: all cores)");

    auto* extremal = app.add_subcommand("extremal", "extremal search over iso classes");
    extremal->add_option("n", order, "order (3..9)")->required();
    extremal->add_option("objective", objective, "max-singular | min-nonsingular")
        ->required()
        ->check(CLI::IsMember({"max-singular", "min-nonsingular"}));
    extremal->add_flag("--json", as_json);
    extremal->add_option("--threads", threads);

    auto* verify_cmd = app.add_subcommand("verify", "run the theorem verification suite");
    verify_cmd->add_option("--claims", claims, "comma-separated claim ids, or 'all'");
    verify_cmd->add_option("--min", n_lo, "smallest order to check");
    verify_cmd->add_option("--max", n_hi, "largest order to check");
    verify_cmd->add_flag("--json", as_json);
    verify_cmd->add_option("--threads", threads);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "emit the published reference "
                                                        "matrices with their locked values");
    fixtures_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze || *convert) {
            std::vector<Tournament> ts;
            auto ingest = [&](const std::string& text) {
                std::string fmt = format;
                if (fmt == "auto")
                    fmt = (text.rfind('T', 0) == 0 && text.find(':') != std::string::npos)
                              ? "code"
                              : "matrix";
                for (auto& t : parse_many(text, fmt)) ts.push_back(std::move(t));
            };
            for (const auto& in : inputs) ingest(in);
            if (!file.empty()) ingest(read_input(file));
            if (inputs.empty() && file.empty()) ingest(read_input("-"));
            if (*analyze) {
                json records = json::array();
                for (const auto& t : ts) records.push_back(analysis_record(t));
                if (as_json)
                    std::cout << records.dump(2) << "\n";
                else
                    for (const auto& rec : records) print_record_text(rec);
            } else {
                for (const auto& t : ts) {
                    if (to_format == "code")
                        std::cout << encode(t).str() << "\n";
                    else
                        std::cout << to_matrix_text(t) << "\n";
                }
            }
            return 0;
        }

        if (*enumerate) {
            std::optional<std::vector<int>> wanted_scores;
            if (!score_filter.empty()) wanted_scores = parse_score_list(score_filter);
            size_t total = 0, kept = 0;
            for (const Tournament& t : enumerate_iso_classes(order, threads)) {
                ++total;
                if (filter_singular && !is_singular(t)) continue;
                if (filter_strong && !is_strong(t)) continue;
                if (wanted_scores && score_vector(t).sorted != *wanted_scores) continue;
                ++kept;
                std::cout << encode(t).str() << "\n";
            }
            std::cerr << "classes: " << total << ", emitted: " << kept << "\n";
            return 0;
        }

        if (*extremal) {
            const auto start = std::chrono::steady_clock::now();
            const ExtremalResult r = objective == "max-singular"
                                         ? max_c3_singular(order, threads)
                                         : min_c3_nonsingular(order, threads);
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            if (as_json) {
                std::cout << extremal_json(r, ms).dump(2) << "\n";
            } else {
                std::cout << to_string(r.objective) << " n=" << r.n << " value=" << r.value
                          << " classes=" << r.witness_count << "\n";
                for (const auto& w : r.witnesses) std::cout << "  " << w.str() << "\n";
                std::cerr << "elapsed_ms: " << ms << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            std::vector<std::string> ids;
            if (claims == "all") {
                ids = claim_ids();
            } else {
                std::istringstream in(claims);
                std::string tok;
                while (std::getline(in, tok, ',')) ids.push_back(tok);
            }
            bool all_pass = true;
            json out = json::array();
            for (const auto& id : ids)
                for (const auto& rep : verify(id, n_lo, n_hi, threads)) {
                    if (!rep.pass && !rep.informational) all_pass = false;
                    if (as_json) {
                        out.push_back(report_json(rep));
                    } else {
                        std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.claim_id << "  n="
                                  << rep.n_lo << ".." << rep.n_hi;
                        if (rep.informational) std::cout << "  [informational]";
                        if (!rep.detail.empty()) std::cout << "  " << rep.detail;
                        std::cout << "\n";
                        for (const auto& ce : rep.counterexamples)
                            std::cout << "    counterexample: " << ce << "\n";
                    }
                }
            if (as_json) std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (*fixtures_cmd) {
            json records = json::array();
            for (const auto& fx : fixtures::all()) {
                json rec = analysis_record(*fx.t);
                rec["name"] = fx.name;
                records.push_back(rec);
            }
            if (as_json)
                std::cout << records.dump(2) << "\n";
            else
                for (const auto& rec : records) {
                    std::cout << rec["name"].get<std::string>() << ": ";
                    print_record_text(rec);
                }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
