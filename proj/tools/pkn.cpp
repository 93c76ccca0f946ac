// pkn — command-line front end for the PKN engine.
//
// Exit codes are a stable contract:
//   0 ok / supported, 1 usage or parse error, 2 IO error,
//   3 opposed, 4 undecided.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pkn/argumentation.hpp"
#include "pkn/config.hpp"
#include "pkn/errors.hpp"
#include "pkn/graph.hpp"
#include "pkn/parser.hpp"
#include "pkn/query.hpp"
#include "pkn/rdf.hpp"
#include "pkn/serializer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitIo = 2;
constexpr int kExitOpposed = 3;
constexpr int kExitUndecided = 4;

struct LoadedFile {
    std::string path;
    pkn::ParseResult parsed;
};

bool read_file(const std::string& path, std::string& out, std::string& error) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = path + ": cannot open file";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

/// Parses every file; IO failures set `io_error`, parse diagnostics go to
/// stderr and bump `parse_errors`.
int load_files(const std::vector<std::string>& paths,
               std::vector<LoadedFile>& out, std::size_t& parse_errors,
               bool print_errors = true) {
    for (const auto& path : paths) {
        std::string text;
        std::string error;
        if (!read_file(path, text, error)) {
            std::cerr << "error: " << error << "\n";
            return kExitIo;
        }
        LoadedFile file{path, pkn::parse_document(text)};
        for (const auto& e : file.parsed.errors) {
            ++parse_errors;
            if (print_errors) {
                std::cerr << path << ":" << e.line << ":" << e.column << ": "
                          << e.message << "\n";
            }
        }
        out.push_back(std::move(file));
    }
    return kExitOk;
}

/// Asserts all parsed statements into one snapshot; query lines in the input
/// files are ignored outside `check`.
int build_graph(const std::vector<std::string>& paths, pkn::KnowledgeGraph& graph,
                const char* command) {
    std::vector<LoadedFile> files;
    std::size_t parse_errors = 0;
    if (int rc = load_files(paths, files, parse_errors); rc != kExitOk) return rc;
    if (parse_errors > 0) {
        std::cerr << "error: " << command << " aborted, " << parse_errors
                  << " parse error" << (parse_errors == 1 ? "" : "s") << "\n";
        return kExitParse;
    }
    std::vector<pkn::Statement> statements;
    for (const auto& f : files) {
        for (const auto& item : f.parsed.items) {
            if (const auto* s = std::get_if<pkn::Statement>(&item)) {
                statements.push_back(*s);
            }
        }
    }
    try {
        graph = pkn::KnowledgeGraph::from_statements(statements);
    } catch (const pkn::PknError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

std::string render_ratio(const pkn::QuantifierResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s (%zu/%zu, %.2f)",
                  r.holds ? "true" : "false", r.where_count, r.from_count,
                  r.ratio);
    return buf;
}

void render_query_result(std::ostream& out, const pkn::QueryResult& result) {
    if (const auto* terms = std::get_if<std::vector<pkn::Term>>(&result)) {
        for (const auto& t : *terms) out << pkn::serialize(t) << "\n";
    } else if (const auto* n = std::get_if<std::size_t>(&result)) {
        out << *n << "\n";
    } else {
        out << render_ratio(std::get<pkn::QuantifierResult>(result)) << "\n";
    }
}

std::string verdict_line(const pkn::Verdict& v) {
    std::string out{pkn::to_string(v.polarity)};
    out += " (";
    out += pkn::to_string(v.net_certainty);
    out += ")";
    return out;
}

int verdict_exit(const pkn::Verdict& v) {
    switch (v.polarity) {
        case pkn::VerdictPolarity::Supported: return kExitOk;
        case pkn::VerdictPolarity::Opposed: return kExitOpposed;
        case pkn::VerdictPolarity::Undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

int cmd_check(const std::vector<std::string>& paths) {
    std::vector<LoadedFile> files;
    std::size_t parse_errors = 0;
    if (int rc = load_files(paths, files, parse_errors); rc != kExitOk) return rc;
    std::size_t statements = 0;
    for (const auto& f : files) statements += f.parsed.items.size();
    std::cout << statements << " statement" << (statements == 1 ? "" : "s")
              << ", " << parse_errors << " error"
              << (parse_errors == 1 ? "" : "s") << "\n";
    return parse_errors == 0 ? kExitOk : kExitParse;
}

int cmd_query(const std::vector<std::string>& paths, const std::string& text,
              const pkn::EngineConfig& config) {
    auto parsed = pkn::parse_query(text);
    if (const auto* e = std::get_if<pkn::ParseError>(&parsed)) {
        std::cerr << "error: " << e->message << " at " << e->line << ":"
                  << e->column << "\n";
        return kExitParse;
    }
    pkn::KnowledgeGraph graph;
    if (int rc = build_graph(paths, graph, "query"); rc != kExitOk) return rc;
    try {
        render_query_result(std::cout, run_query(graph, std::get<pkn::Query>(parsed),
                                                 config));
    } catch (const pkn::PknError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

int cmd_ask(const std::vector<std::string>& paths, const std::string& text,
            bool explain_tree, const pkn::EngineConfig& config) {
    auto parsed = pkn::parse_condition(text);
    if (const auto* e = std::get_if<pkn::ParseError>(&parsed)) {
        std::cerr << "error: " << e->message << " at " << e->line << ":"
                  << e->column << "\n";
        return kExitParse;
    }
    pkn::KnowledgeGraph graph;
    if (int rc = build_graph(paths, graph, "ask"); rc != kExitOk) return rc;
    try {
        auto verdict = pkn::judge(graph, std::get<pkn::Condition>(parsed),
                                  pkn::ProofParams::from_config(config), config);
        if (explain_tree) {
            std::cout << pkn::explain(verdict, graph);
        } else {
            std::cout << verdict_line(verdict) << "\n";
        }
        return verdict_exit(verdict);
    } catch (const pkn::PknError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_export(const std::vector<std::string>& paths) {
    pkn::KnowledgeGraph graph;
    // build_graph parses everything before a single byte of Turtle is
    // produced, so a parse error never yields partial output
    if (int rc = build_graph(paths, graph, "export"); rc != kExitOk) return rc;
    std::cout << pkn::rdf::to_turtle(graph);
    return kExitOk;
}

int cmd_repl(const std::vector<std::string>& paths,
             const pkn::EngineConfig& config) {
    pkn::KnowledgeGraph base;
    if (int rc = build_graph(paths, base, "repl"); rc != kExitOk) return rc;
    std::vector<pkn::KnowledgeGraph> history{base};
    bool explain_on = false;

    std::string line;
    while (std::getline(std::cin, line)) {
        // strip trailing CR for piped CRLF transcripts
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
            trimmed.remove_prefix(1);
        }
        if (trimmed.empty() || trimmed.front() == '#') continue;
        std::string first(trimmed.substr(0, trimmed.find_first_of(" \t")));

        if (first == "quit" || first == "exit") return kExitOk;
        if (trimmed == "explain on") { explain_on = true; continue; }
        if (trimmed == "explain off") { explain_on = false; continue; }
        if (trimmed == "undo") {
            if (history.size() > 1) {
                history.pop_back();
                std::cout << "undone\n";
            } else {
                std::cout << "nothing to undo\n";
            }
            continue;
        }
        try {
            if (first == "ask") {
                auto parsed = pkn::parse_condition(
                    std::string(trimmed.substr(first.size())));
                if (const auto* e = std::get_if<pkn::ParseError>(&parsed)) {
                    std::cout << "error: " << e->message << "\n";
                    continue;
                }
                auto verdict = pkn::judge(history.back(),
                                          std::get<pkn::Condition>(parsed),
                                          pkn::ProofParams::from_config(config),
                                          config);
                if (explain_on) {
                    std::cout << pkn::explain(verdict, history.back());
                } else {
                    std::cout << verdict_line(verdict) << "\n";
                }
            } else if (first == "which" || first == "count" || first == "few" ||
                       first == "many" || first == "most") {
                auto parsed = pkn::parse_query(std::string(trimmed));
                if (const auto* e = std::get_if<pkn::ParseError>(&parsed)) {
                    std::cout << "error: " << e->message << "\n";
                    continue;
                }
                render_query_result(std::cout,
                                    run_query(history.back(),
                                              std::get<pkn::Query>(parsed),
                                              config));
            } else {
                auto parsed = pkn::parse_statement(std::string(trimmed));
                if (const auto* e = std::get_if<pkn::ParseError>(&parsed)) {
                    std::cout << "error: " << e->message << "\n";
                    continue;
                }
                auto [next, id] = history.back().with_statement(
                    std::get<pkn::Statement>(parsed));
                history.push_back(std::move(next));
                std::cout << "asserted\n";
                (void)id;
            }
        } catch (const pkn::PknError& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PKN knowledge-graph engine"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value engine config file");

    // flag storage; only options the user actually set override env/config
    double depth = 0, min_certainty = 0, alpha = 0, few = 0, many = 0, most = 0;
    auto* depth_opt = app.add_option("--depth", depth, "max proof depth");
    auto* minc_opt = app.add_option("--min-certainty", min_certainty,
                                    "anchor cutoff for proofs");
    auto* alpha_opt = app.add_option("--alpha", alpha, "fuzzy acceptance threshold");
    auto* few_opt = app.add_option("--few", few, "few quantifier threshold");
    auto* many_opt = app.add_option("--many", many, "many quantifier threshold");
    auto* most_opt = app.add_option("--most", most, "most quantifier threshold");
    app.fallthrough();

    std::vector<std::string> files;
    std::string query_text;
    std::string supposition_text;
    bool explain_tree = false;

    auto* check = app.add_subcommand("check", "parse files and report diagnostics");
    check->add_option("files", files, "PKN files")->required();

    auto* query = app.add_subcommand("query", "run a query against the files");
    query->add_option("query", query_text, "query text")->required();
    query->add_option("files", files, "PKN files");

    auto* ask = app.add_subcommand("ask", "judge a supposition");
    ask->add_option("supposition", supposition_text, "condition text")->required();
    ask->add_option("files", files, "PKN files");
    ask->add_flag("--explain", explain_tree, "print the explanation tree");

    auto* exp = app.add_subcommand("export", "emit Turtle on stdout");
    exp->add_option("files", files, "PKN files");

    auto* repl = app.add_subcommand("repl", "interactive session");
    repl->add_option("files", files, "PKN files preloaded into the session");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    pkn::EngineConfig config;  // defaults
    if (!config_path.empty()) {
        std::string error;
        if (!config.load_file(config_path, &error)) {
            std::cerr << "error: " << error << "\n";
            return kExitIo;
        }
    }
    config.load_env();
    if (depth_opt->count()) config.max_depth = static_cast<int>(depth);
    if (minc_opt->count()) config.min_certainty = min_certainty;
    if (alpha_opt->count()) config.alpha = alpha;
    if (few_opt->count()) config.few_threshold = few;
    if (many_opt->count()) config.many_threshold = many;
    if (most_opt->count()) config.most_threshold = most;
    if (config.max_depth < 1 || config.alpha <= 0 || config.alpha > 1 ||
        config.few_threshold <= 0 || config.few_threshold > 1 ||
        config.many_threshold <= 0 || config.many_threshold > 1 ||
        config.most_threshold <= 0 || config.most_threshold > 1) {
        std::cerr << "error: thresholds must lie in (0,1] and depth must be >= 1\n";
        return kExitParse;
    }

    if (check->parsed()) return cmd_check(files);
    if (query->parsed()) return cmd_query(files, query_text, config);
    if (ask->parsed()) return cmd_ask(files, supposition_text, explain_tree, config);
    if (exp->parsed()) return cmd_export(files);
    if (repl->parsed()) return cmd_repl(files, config);
    return kExitParse;
}
