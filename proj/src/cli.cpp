#include "fga/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fga/engine.hpp"
#include "fga/express.hpp"
#include "fga/oracle.hpp"
#include "fga/text.hpp"

namespace fga::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommandContext {
    bool json = false;
    std::ostream* out = nullptr;
};

void emit(const CommandContext& ctx, const Json& payload, const std::string& text) {
    if (ctx.json)
        *ctx.out << payload.dump(2) << "\n";
    else
        *ctx.out << text << "\n";
}

// --gens / --gens-crs values name either a file (one element per line,
// '#' comments) or an inline ';'-separated list.
std::vector<std::string> load_generator_texts(const std::string& source) {
    std::vector<std::string> texts;
    auto push = [&texts](std::string item) {
        std::size_t begin = item.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos) return;
        std::size_t end = item.find_last_not_of(" \t\r\n");
        texts.push_back(item.substr(begin, end - begin + 1));
    };

    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream file(source);
        if (!file) throw parse_error("io_error", "cannot read generator file '" + source + "'");
        std::string line;
        while (std::getline(file, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            push(line);
        }
    } else {
        std::stringstream stream(source);
        std::string item;
        while (std::getline(stream, item, ';')) push(item);
    }
    return texts;
}

// Fallback alphabet inference for commands that take no order spec: generator
// names in order of first appearance across the given texts.
Alphabet infer_alphabet(const std::vector<std::string>& texts) {
    std::vector<std::string> names;
    for (const auto& text : texts) {
        std::size_t i = 0;
        while (i < text.size()) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isalpha(c) || c == '_') {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                if (name != "e" &&
                    std::find(names.begin(), names.end(), name) == names.end())
                    names.push_back(name);
                i = j;
            } else {
                ++i;
            }
        }
    }
    if (names.empty())
        throw parse_error("invalid_element", "no generator names found in the input");
    return Alphabet(names);
}

std::vector<AlgebraElement> parse_generators(const std::vector<std::string>& texts,
                                             const Field& field, const Alphabet& alphabet) {
    std::vector<AlgebraElement> generators;
    generators.reserve(texts.size());
    for (const auto& text : texts) generators.push_back(parse_element(text, field, alphabet));
    return generators;
}

std::vector<std::string> format_elements(const std::vector<AlgebraElement>& elements,
                                         const ExposureOrder& ord) {
    std::vector<std::string> texts;
    texts.reserve(elements.size());
    for (const auto& element : elements) texts.push_back(format_element(element, ord));
    return texts;
}

std::vector<std::string> format_words(const std::vector<Word>& words) {
    std::vector<std::string> texts;
    texts.reserve(words.size());
    for (const auto& word : words) texts.push_back(format_word(word));
    return texts;
}

std::string join(const std::vector<std::string>& parts, const std::string& separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += separator;
        out += parts[i];
    }
    return out;
}

Json stats_json(const EngineStats& stats) {
    return Json{{"normalize_reduction_steps", stats.normalize_reduction_steps},
                {"second_reduction_steps", stats.second_reduction_steps},
                {"seconds_computed", stats.seconds_computed},
                {"replacements", stats.replacements},
                {"demotions", stats.demotions},
                {"discarded", stats.discarded}};
}

std::string stats_text(const EngineStats& stats) {
    std::ostringstream out;
    out << "stats.normalize_reduction_steps: " << stats.normalize_reduction_steps << "\n"
        << "stats.second_reduction_steps: " << stats.second_reduction_steps << "\n"
        << "stats.seconds_computed: " << stats.seconds_computed << "\n"
        << "stats.replacements: " << stats.replacements << "\n"
        << "stats.demotions: " << stats.demotions << "\n"
        << "stats.discarded: " << stats.discarded;
    return out.str();
}

std::size_t oracle_column_cap() {
    if (const char* value = std::getenv("FGA_COLUMN_CAP")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(value, &end, 10);
        if (end == nullptr || *end != '\0' || cap == 0)
            throw parse_error("invalid_config", "FGA_COLUMN_CAP must be a positive integer");
        return static_cast<std::size_t>(cap);
    }
    return MembershipOracle::kDefaultColumnCap;
}

// Builds a validated reduction system from --gens-crs input.
ReductionSystem load_crs(const std::string& source, const Field& field, const OrderSpec& spec) {
    std::vector<AlgebraElement> elements =
        parse_generators(load_generator_texts(source), field, spec.alphabet);
    ReductionSystem system(std::move(elements), *spec.order);
    CrsReport report = check_crs(system, *spec.order);
    if (!report.valid)
        throw error("invalid_crs", "condition " + std::to_string(report.violated_condition) +
                                       " violated: " + report.witness);
    return system;
}

struct BasisRunner {
    BasisResult result;
    OrderSpec spec;
    Field field;

    Json to_json(bool with_stats) const {
        Json payload{{"improper", result.improper},
                     {"firsts", format_elements(result.firsts, *spec.order)},
                     {"seconds", format_elements(result.seconds, *spec.order)},
                     {"forbidden_prefixes", format_words(result.forbidden_prefixes(*spec.order))},
                     {"rank", result.rank()}};
        if (with_stats) payload["stats"] = stats_json(result.stats);
        return payload;
    }

    std::string to_text(bool with_stats) const {
        std::ostringstream out;
        out << "improper: " << (result.improper ? "true" : "false") << "\n";
        out << "rank: " << result.rank() << "\n";
        out << "firsts:";
        for (const auto& text : format_elements(result.firsts, *spec.order)) out << "\n  " << text;
        out << "\nseconds:";
        for (const auto& text : format_elements(result.seconds, *spec.order)) out << "\n  " << text;
        out << "\nforbidden_prefixes: "
            << join(format_words(result.forbidden_prefixes(*spec.order)), ", ");
        if (with_stats) out << "\n" << stats_text(result.stats);
        return out.str();
    }
};

BasisRunner run_basis(const std::string& gens, const std::string& order_text,
                      const std::string& field_text) {
    BasisRunner runner{BasisResult{}, parse_order_spec(order_text), parse_field_spec(field_text)};
    std::vector<AlgebraElement> generators =
        parse_generators(load_generator_texts(gens), runner.field, runner.spec.alphabet);
    runner.result = exposure_and_groebner(generators, runner.spec.order);
    return runner;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation with right ideals of free group algebras"};
    app.require_subcommand(1);

    CommandContext ctx;
    ctx.out = &out;

    std::string order_text;
    std::string field_text = "q";
    std::string gens_text;
    std::string gens_crs_text;
    std::string element_text;
    std::size_t max_length = 4;
    std::size_t radius = 0;
    bool with_stats = false;
    std::string left_text;
    std::string right_text;

    auto add_common = [&ctx](CLI::App* cmd) {
        cmd->add_flag("--json", ctx.json, "emit JSON instead of text");
    };

    CLI::App* compare = app.add_subcommand("compare", "compare two words in an exposure order");
    compare->add_option("--order", order_text, "order spec")->required();
    compare->add_option("left", left_text, "first word")->required();
    compare->add_option("right", right_text, "second word")->required();
    add_common(compare);

    CLI::App* validate = app.add_subcommand("validate-order",
                                            "check the order contract up to a length bound");
    validate->add_option("--order", order_text, "order spec")->required();
    validate->add_option("--max-len", max_length, "word length bound");
    add_common(validate);

    CLI::App* basis = app.add_subcommand("basis", "compute the basis and reducing system");
    basis->add_option("--gens", gens_text, "generators (file or inline)")->required();
    basis->add_option("--order", order_text, "order spec")->required();
    basis->add_option("--field", field_text, "field spec");
    basis->add_flag("--stats", with_stats, "emit reduction-step counters");
    add_common(basis);

    CLI::App* reduce = app.add_subcommand("reduce", "normal form modulo a reducing system");
    reduce->add_option("--gens-crs", gens_crs_text, "reducing system (file or inline)")->required();
    reduce->add_option("--order", order_text, "order spec")->required();
    reduce->add_option("--field", field_text, "field spec");
    reduce->add_option("element", element_text, "element to reduce")->required();
    add_common(reduce);

    CLI::App* divide = app.add_subcommand("divide", "division with remainder");
    divide->add_option("--gens-crs", gens_crs_text, "reducing system (file or inline)")->required();
    divide->add_option("--order", order_text, "order spec")->required();
    divide->add_option("--field", field_text, "field spec");
    divide->add_option("element", element_text, "element to divide")->required();
    add_common(divide);

    CLI::App* member = app.add_subcommand("member", "ideal membership");
    member->add_option("--gens", gens_text, "ideal generators (file or inline)");
    member->add_option("--gens-crs", gens_crs_text, "reducing system (file or inline)");
    member->add_option("--order", order_text, "order spec")->required();
    member->add_option("--field", field_text, "field spec");
    member->add_option("element", element_text, "element to test")->required();
    add_common(member);

    CLI::App* transversal = app.add_subcommand("transversal",
                                               "forbidden prefixes of the minimal transversal");
    transversal->add_option("--gens-crs", gens_crs_text, "reducing system (file or inline)")
        ->required();
    transversal->add_option("--order", order_text, "order spec")->required();
    transversal->add_option("--field", field_text, "field spec");
    add_common(transversal);

    CLI::App* check = app.add_subcommand("check-crs", "validate a reducing system");
    check->add_option("--gens-crs", gens_crs_text, "candidate system (file or inline)")->required();
    check->add_option("--order", order_text, "order spec")->required();
    check->add_option("--field", field_text, "field spec");
    add_common(check);

    CLI::App* express_cmd = app.add_subcommand("express",
                                               "coordinates of a member in the computed basis");
    express_cmd->add_option("--gens", gens_text, "ideal generators (file or inline)")->required();
    express_cmd->add_option("--order", order_text, "order spec")->required();
    express_cmd->add_option("--field", field_text, "field spec");
    express_cmd->add_option("element", element_text, "member element")->required();
    add_common(express_cmd);

    CLI::App* matrix_cmd = app.add_subcommand("matrix-c",
                                              "change-of-basis matrix from firsts to seconds");
    matrix_cmd->add_option("--gens", gens_text, "ideal generators (file or inline)")->required();
    matrix_cmd->add_option("--order", order_text, "order spec")->required();
    matrix_cmd->add_option("--field", field_text, "field spec");
    add_common(matrix_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle-member",
                                              "brute-force membership within a radius");
    oracle_cmd->add_option("--gens", gens_text, "ideal generators (file or inline)")->required();
    oracle_cmd->add_option("--radius", radius, "ball radius")->required();
    oracle_cmd->add_option("--field", field_text, "field spec");
    oracle_cmd->add_option("--order", order_text, "order spec (for the alphabet; optional)");
    oracle_cmd->add_option("element", element_text, "element to test")->required();
    add_common(oracle_cmd);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*compare) {
            OrderSpec spec = parse_order_spec(order_text);
            Word u = parse_word(left_text, spec.alphabet);
            Word v = parse_word(right_text, spec.alphabet);
            auto cmp = spec.order->compare(u, v);
            std::string verdict = cmp < 0 ? "less" : cmp > 0 ? "greater" : "equal";
            emit(ctx, Json{{"result", verdict}}, verdict);
            return 0;
        }

        if (*validate) {
            OrderSpec spec = parse_order_spec(order_text);
            OrderValidation report = validate_order(*spec.order, max_length);
            emit(ctx, Json{{"valid", report.valid}, {"message", report.message}},
                 report.valid ? "valid" : "invalid: " + report.message);
            return report.valid ? 0 : 1;
        }

        if (*basis) {
            BasisRunner runner = run_basis(gens_text, order_text, field_text);
            emit(ctx, runner.to_json(with_stats), runner.to_text(with_stats));
            return 0;
        }

        if (*reduce) {
            OrderSpec spec = parse_order_spec(order_text);
            Field field = parse_field_spec(field_text);
            ReductionSystem system = load_crs(gens_crs_text, field, spec);
            AlgebraElement f = parse_element(element_text, field, spec.alphabet);
            AlgebraElement remainder = reduce_mod_transversal(f, system, *spec.order);
            std::string text = format_element(remainder, *spec.order);
            emit(ctx,
                 Json{{"remainder", text},
                      {"forbidden_prefixes", format_words(transversal_neighbors(system))}},
                 text);
            return 0;
        }

        if (*divide) {
            OrderSpec spec = parse_order_spec(order_text);
            Field field = parse_field_spec(field_text);
            ReductionSystem system = load_crs(gens_crs_text, field, spec);
            AlgebraElement f = parse_element(element_text, field, spec.alphabet);
            DivisionResult division = divide_with_remainder(f, system, *spec.order);
            Json payload{{"remainder", format_element(division.remainder, *spec.order)},
                         {"quotients", format_elements(division.quotients, *spec.order)},
                         {"forbidden_prefixes", format_words(transversal_neighbors(system))}};
            std::ostringstream text;
            text << "remainder: " << format_element(division.remainder, *spec.order);
            for (std::size_t i = 0; i < division.quotients.size(); ++i)
                text << "\nquotient[" << i
                     << "]: " << format_element(division.quotients[i], *spec.order);
            emit(ctx, payload, text.str());
            return 0;
        }

        if (*member) {
            if (gens_text.empty() == gens_crs_text.empty())
                throw parse_error("invalid_config",
                                  "member requires exactly one of --gens / --gens-crs");
            OrderSpec spec = parse_order_spec(order_text);
            Field field = parse_field_spec(field_text);
            AlgebraElement f = parse_element(element_text, field, spec.alphabet);

            bool verdict;
            AlgebraElement remainder = f;
            if (!gens_crs_text.empty()) {
                ReductionSystem system = load_crs(gens_crs_text, field, spec);
                remainder = reduce_mod_transversal(f, system, *spec.order);
                verdict = remainder.is_zero();
            } else {
                BasisResult result = exposure_and_groebner(
                    parse_generators(load_generator_texts(gens_text), field, spec.alphabet),
                    spec.order);
                if (result.improper) {
                    verdict = true;
                    remainder = AlgebraElement::zero(field, spec.alphabet);
                } else {
                    ReductionSystem system = result.system(*spec.order);
                    remainder = reduce_mod_transversal(f, system, *spec.order);
                    verdict = remainder.is_zero();
                }
            }
            emit(ctx,
                 Json{{"member", verdict},
                      {"remainder", format_element(remainder, *spec.order)}},
                 verdict ? "true" : "false");
            return verdict ? 0 : 1;
        }

        if (*transversal) {
            OrderSpec spec = parse_order_spec(order_text);
            Field field = parse_field_spec(field_text);
            ReductionSystem system = load_crs(gens_crs_text, field, spec);
            std::vector<std::string> words = format_words(transversal_neighbors(system));
            emit(ctx, Json{{"forbidden_prefixes", words}}, join(words, ", "));
            return 0;
        }

        if (*check) {
            OrderSpec spec = parse_order_spec(order_text);
            Field field = parse_field_spec(field_text);
            ReductionSystem system(
                parse_generators(load_generator_texts(gens_crs_text), field, spec.alphabet),
                *spec.order);
            CrsReport report = check_crs(system, *spec.order);
            Json payload{{"valid", report.valid}};
            if (!report.valid) {
                payload["condition"] = report.violated_condition;
                payload["witness"] = report.witness;
            }
            emit(ctx, payload,
                 report.valid ? "valid"
                              : "invalid: condition " + std::to_string(report.violated_condition) +
                                    ": " + report.witness);
            return report.valid ? 0 : 1;
        }

        if (*express_cmd) {
            BasisRunner runner = run_basis(gens_text, order_text, field_text);
            AlgebraElement h = parse_element(element_text, runner.field, runner.spec.alphabet);
            const ExposureOrder& ord = *runner.spec.order;

            std::vector<AlgebraElement> coefficients;
            Json matrix_json = Json::array();
            if (runner.result.improper) {
                coefficients = express(h, runner.result.firsts, AlgebraMatrix{}, ord);
            } else {
                MatrixCResult matrix = compute_matrix_c(runner.result.firsts, ord);
                coefficients = express(h, runner.result.firsts, matrix.matrix, ord);
                for (const auto& row : matrix.matrix.entries)
                    matrix_json.push_back(format_elements(row, ord));
            }
            Json payload{{"coefficients", format_elements(coefficients, ord)},
                         {"matrix_c", matrix_json}};
            std::ostringstream text;
            for (std::size_t i = 0; i < coefficients.size(); ++i) {
                if (i > 0) text << "\n";
                text << "coefficient[" << i << "]: " << format_element(coefficients[i], ord);
            }
            emit(ctx, payload, text.str());
            return 0;
        }

        if (*matrix_cmd) {
            BasisRunner runner = run_basis(gens_text, order_text, field_text);
            const ExposureOrder& ord = *runner.spec.order;
            MatrixCResult matrix = compute_matrix_c(runner.result.firsts, ord);
            Json matrix_json = Json::array();
            for (const auto& row : matrix.matrix.entries)
                matrix_json.push_back(format_elements(row, ord));
            Json payload{{"matrix_c", matrix_json},
                         {"seconds", format_elements(matrix.seconds, ord)}};
            std::ostringstream text;
            for (std::size_t row = 0; row < matrix.matrix.size(); ++row) {
                if (row > 0) text << "\n";
                text << join(format_elements(matrix.matrix.entries[row], ord), " | ");
            }
            emit(ctx, payload, text.str());
            return 0;
        }

        if (*oracle_cmd) {
            Field field = parse_field_spec(field_text);
            std::vector<std::string> gen_texts = load_generator_texts(gens_text);
            Alphabet alphabet = order_text.empty()
                                    ? infer_alphabet([&] {
                                          std::vector<std::string> all = gen_texts;
                                          all.push_back(element_text);
                                          return all;
                                      }())
                                    : parse_order_spec(order_text).alphabet;
            std::vector<AlgebraElement> generators = parse_generators(gen_texts, field, alphabet);
            AlgebraElement f = parse_element(element_text, field, alphabet);
            OracleAnswer answer = brute_force_member(f, generators, radius, oracle_column_cap());
            bool yes = answer == OracleAnswer::Yes;
            emit(ctx, Json{{"result", yes ? "yes" : "not_within_radius"}},
                 yes ? "yes" : "not_within_radius");
            return yes ? 0 : 1;
        }
    } catch (const parse_error& e) {
        if (ctx.json)
            out << Json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const membership_error& e) {
        if (ctx.json) {
            // The remainder is a useful diagnostic; reparse-friendly like all output.
            out << Json{{"error", e.code()},
                        {"message", e.what()},
                        {"remainder",
                         format_element(e.remainder(), *parse_order_spec(order_text).order)}}
                       .dump(2)
                << "\n";
        }
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        if (ctx.json)
            out << Json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace fga::cli
