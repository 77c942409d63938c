#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fga/engine.hpp"
#include "fga/express.hpp"
#include "fga/oracle.hpp"
#include "fga/text.hpp"

namespace py = pybind11;

namespace {

using namespace fga;

std::vector<AlgebraElement> parse_many(const std::vector<std::string>& texts, const Field& field,
                                       const Alphabet& alphabet) {
    std::vector<AlgebraElement> elements;
    elements.reserve(texts.size());
    for (const auto& text : texts) elements.push_back(parse_element(text, field, alphabet));
    return elements;
}

std::vector<std::string> format_many(const std::vector<AlgebraElement>& elements,
                                     const ExposureOrder& ord) {
    std::vector<std::string> texts;
    texts.reserve(elements.size());
    for (const auto& element : elements) texts.push_back(format_element(element, ord));
    return texts;
}

std::vector<std::string> format_word_list(const std::vector<Word>& words) {
    std::vector<std::string> texts;
    texts.reserve(words.size());
    for (const auto& word : words) texts.push_back(format_word(word));
    return texts;
}

py::dict basis(const std::vector<std::string>& generators, const std::string& order,
               const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    BasisResult result =
        exposure_and_groebner(parse_many(generators, field, spec.alphabet), spec.order);

    py::dict out;
    out["improper"] = result.improper;
    out["firsts"] = format_many(result.firsts, *spec.order);
    out["seconds"] = format_many(result.seconds, *spec.order);
    out["forbidden_prefixes"] = format_word_list(result.forbidden_prefixes(*spec.order));
    out["rank"] = result.rank();
    return out;
}

ReductionSystem make_system(const std::vector<std::string>& crs_elements, const Field& field,
                            const OrderSpec& spec) {
    ReductionSystem system(parse_many(crs_elements, field, spec.alphabet), *spec.order);
    CrsReport report = check_crs(system, *spec.order);
    if (!report.valid)
        throw error("invalid_crs", "condition " + std::to_string(report.violated_condition) +
                                       " violated: " + report.witness);
    return system;
}

std::string reduce(const std::string& element, const std::vector<std::string>& crs_elements,
                   const std::string& order, const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    ReductionSystem system = make_system(crs_elements, field, spec);
    AlgebraElement f = parse_element(element, field, spec.alphabet);
    return format_element(reduce_mod_transversal(f, system, *spec.order), *spec.order);
}

py::dict divide(const std::string& element, const std::vector<std::string>& crs_elements,
                const std::string& order, const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    ReductionSystem system = make_system(crs_elements, field, spec);
    AlgebraElement f = parse_element(element, field, spec.alphabet);
    DivisionResult result = divide_with_remainder(f, system, *spec.order);

    py::dict out;
    out["remainder"] = format_element(result.remainder, *spec.order);
    out["quotients"] = format_many(result.quotients, *spec.order);
    out["forbidden_prefixes"] = format_word_list(transversal_neighbors(system));
    return out;
}

bool member(const std::string& element, const std::vector<std::string>& generators,
            const std::string& order, const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    BasisResult result =
        exposure_and_groebner(parse_many(generators, field, spec.alphabet), spec.order);
    if (result.improper) return true;
    AlgebraElement f = parse_element(element, field, spec.alphabet);
    return is_member(f, result.system(*spec.order), *spec.order);
}

py::dict express_py(const std::string& element, const std::vector<std::string>& generators,
                    const std::string& order, const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    BasisResult result =
        exposure_and_groebner(parse_many(generators, field, spec.alphabet), spec.order);
    AlgebraElement h = parse_element(element, field, spec.alphabet);

    py::dict out;
    py::list matrix;
    std::vector<AlgebraElement> coefficients;
    if (result.improper) {
        coefficients = express(h, result.firsts, AlgebraMatrix{}, *spec.order);
    } else {
        MatrixCResult c = compute_matrix_c(result.firsts, *spec.order);
        coefficients = express(h, result.firsts, c.matrix, *spec.order);
        for (const auto& row : c.matrix.entries) matrix.append(format_many(row, *spec.order));
    }
    out["coefficients"] = format_many(coefficients, *spec.order);
    out["matrix_c"] = matrix;
    return out;
}

py::dict matrix_c(const std::vector<std::string>& generators, const std::string& order,
                  const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    BasisResult result =
        exposure_and_groebner(parse_many(generators, field, spec.alphabet), spec.order);
    MatrixCResult c = compute_matrix_c(result.firsts, *spec.order);

    py::dict out;
    py::list matrix;
    for (const auto& row : c.matrix.entries) matrix.append(format_many(row, *spec.order));
    out["matrix_c"] = matrix;
    out["seconds"] = format_many(c.seconds, *spec.order);
    return out;
}

std::vector<std::string> transversal(const std::vector<std::string>& crs_elements,
                                     const std::string& order, const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    return format_word_list(transversal_neighbors(make_system(crs_elements, field, spec)));
}

py::dict check_crs_py(const std::vector<std::string>& crs_elements, const std::string& order,
                      const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    ReductionSystem system(parse_many(crs_elements, field, spec.alphabet), *spec.order);
    CrsReport report = check_crs(system, *spec.order);
    py::dict out;
    out["valid"] = report.valid;
    if (!report.valid) {
        out["condition"] = report.violated_condition;
        out["witness"] = report.witness;
    }
    return out;
}

std::string compare(const std::string& order, const std::string& left, const std::string& right) {
    OrderSpec spec = parse_order_spec(order);
    auto cmp = spec.order->compare(parse_word(left, spec.alphabet),
                                   parse_word(right, spec.alphabet));
    return cmp < 0 ? "less" : cmp > 0 ? "greater" : "equal";
}

std::string oracle_member(const std::string& element, const std::vector<std::string>& generators,
                          std::size_t radius, const std::string& order,
                          const std::string& field_text) {
    OrderSpec spec = parse_order_spec(order);
    Field field = parse_field_spec(field_text);
    AlgebraElement f = parse_element(element, field, spec.alphabet);
    OracleAnswer answer =
        brute_force_member(f, parse_many(generators, field, spec.alphabet), radius);
    return answer == OracleAnswer::Yes ? "yes" : "not_within_radius";
}

bool validate(const std::string& order, std::size_t max_length) {
    OrderSpec spec = parse_order_spec(order);
    return validate_order(*spec.order, max_length).valid;
}

} // namespace

PYBIND11_MODULE(_fga, m) {
    m.doc() = "exact computation with right ideals of free group algebras";

    // Translators run newest-first, so the subclass goes second.
    py::register_exception<fga::error>(m, "FgaError", PyExc_RuntimeError);
    py::register_exception<fga::parse_error>(m, "FgaParseError", PyExc_ValueError);

    m.def("basis", &basis, py::arg("generators"), py::arg("order"), py::arg("field") = "q",
          "basis and full reducing system of the generated right ideal");
    m.def("reduce", &reduce, py::arg("element"), py::arg("crs"), py::arg("order"),
          py::arg("field") = "q", "normal form modulo a reducing system");
    m.def("divide", &divide, py::arg("element"), py::arg("crs"), py::arg("order"),
          py::arg("field") = "q", "division with remainder by a reducing system");
    m.def("member", &member, py::arg("element"), py::arg("generators"), py::arg("order"),
          py::arg("field") = "q", "ideal membership via the computed reducing system");
    m.def("express", &express_py, py::arg("element"), py::arg("generators"), py::arg("order"),
          py::arg("field") = "q", "coordinates of a member in the computed basis");
    m.def("matrix_c", &matrix_c, py::arg("generators"), py::arg("order"), py::arg("field") = "q",
          "change-of-basis matrix from the basis to its seconds");
    m.def("transversal", &transversal, py::arg("crs"), py::arg("order"), py::arg("field") = "q",
          "forbidden prefixes of the minimal transversal");
    m.def("check_crs", &check_crs_py, py::arg("crs"), py::arg("order"), py::arg("field") = "q",
          "validate a reducing system");
    m.def("compare", &compare, py::arg("order"), py::arg("left"), py::arg("right"),
          "compare two words in an exposure order");
    m.def("oracle_member", &oracle_member, py::arg("element"), py::arg("generators"),
          py::arg("radius"), py::arg("order"), py::arg("field") = "q",
          "brute-force membership within a ball radius");
    m.def("validate_order", &validate, py::arg("order"), py::arg("max_length") = 4,
          "exhaustive order-contract check up to a length bound");
}
