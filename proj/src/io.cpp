#include "gelfand/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gelfand {

namespace {

std::vector<std::pair<double, double>> block_to_pairs(const ComplexMatrix& m) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(m.entries().size());
    for (const Complex& z : m.entries()) {
        pairs.emplace_back(z.real(), z.imag());
    }
    return pairs;
}

Json blocks_to_json(const std::vector<const ComplexMatrix*>& blocks) {
    Json out = Json::array();
    for (const ComplexMatrix* m : blocks) {
        Json block = Json::array();
        for (const auto& [re, im] : block_to_pairs(*m)) {
            block.push_back(Json::array({re, im}));
        }
        out.push_back(std::move(block));
    }
    return out;
}

Complex pair_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorKind::ParseError, "complex entries must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

// A block is a flat row-major list of n^2 complex pairs.
ComplexMatrix block_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError, "block must be a nonempty array of [re, im] pairs");
    }
    const std::size_t len = j.size();
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(len))));
    if (n * n != len) {
        throw Error(ErrorKind::ParseError,
                    "block length " + std::to_string(len) + " is not a perfect square");
    }
    std::vector<Complex> entries;
    entries.reserve(len);
    for (const Json& entry : j) {
        entries.push_back(pair_from_json(entry));
    }
    return ComplexMatrix(n, n, std::move(entries));
}

std::vector<ComplexMatrix> block_list_from_json(const Json& j, const char* field) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError, std::string(field) + " must be a nonempty array");
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(j.size());
    for (const Json& block : j) {
        blocks.push_back(block_from_json(block));
    }
    return blocks;
}

AlgebraSignature signature_of_blocks(const std::vector<ComplexMatrix>& blocks) {
    std::vector<std::size_t> dims;
    dims.reserve(blocks.size());
    for (const ComplexMatrix& m : blocks) {
        dims.push_back(m.rows());
    }
    return AlgebraSignature(std::move(dims));
}

const Json& require_field(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) {
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + field + "\"");
    }
    return j.at(field);
}

AlgebraSignature signature_from_json(const Json& j, const char* field) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError,
                    std::string(field) + " must be a nonempty array of block dimensions");
    }
    std::vector<std::size_t> dims;
    for (const Json& d : j) {
        if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
            throw Error(ErrorKind::ParseError,
                        std::string(field) + " entries must be positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    return AlgebraSignature(std::move(dims));
}

}  // namespace

Json element_to_json(const Element& x) {
    std::vector<const ComplexMatrix*> blocks;
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        blocks.push_back(&x.block(b));
    }
    return Json{{"blocks", blocks_to_json(blocks)}};
}

Element element_from_json(const Json& j) {
    std::vector<ComplexMatrix> blocks = block_list_from_json(require_field(j, "blocks"), "blocks");
    AlgebraSignature sig = signature_of_blocks(blocks);
    return Element(std::move(sig), std::move(blocks));
}

Json state_to_json(const State& sigma) {
    std::vector<const ComplexMatrix*> blocks;
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        blocks.push_back(&sigma.density(b));
    }
    return Json{{"densities", blocks_to_json(blocks)}};
}

State state_from_json(const Json& j) {
    std::vector<ComplexMatrix> blocks =
        block_list_from_json(require_field(j, "densities"), "densities");
    AlgebraSignature sig = signature_of_blocks(blocks);
    return State(std::move(sig), std::move(blocks));
}

Json measure_to_json(const FinMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& [weight, state] : mu.atoms()) {
        atoms.push_back(Json{{"weight", weight}, {"state", state_to_json(state)}});
    }
    return Json{{"atoms", std::move(atoms)}};
}

FinMeasure measure_from_json(const Json& j) {
    const Json& atoms = require_field(j, "atoms");
    if (!atoms.is_array() || atoms.empty()) {
        throw Error(ErrorKind::ParseError, "atoms must be a nonempty array");
    }
    std::vector<std::pair<double, State>> parsed;
    parsed.reserve(atoms.size());
    for (const Json& atom : atoms) {
        const Json& weight = require_field(atom, "weight");
        if (!weight.is_number()) {
            throw Error(ErrorKind::ParseError, "atom weight must be a number");
        }
        parsed.emplace_back(weight.get<double>(), state_from_json(require_field(atom, "state")));
    }
    return FinMeasure(std::move(parsed));
}

Json linmap_to_json(const LinMap& f) {
    Json coeffs = Json::array();
    for (const Complex& z : f.coeffs().entries()) {
        coeffs.push_back(Json::array({z.real(), z.imag()}));
    }
    return Json{
        {"dom", f.dom().blocks()},
        {"cod", f.cod().blocks()},
        {"coeffs", std::move(coeffs)},
    };
}

LinMap linmap_from_json(const Json& j) {
    AlgebraSignature dom = signature_from_json(require_field(j, "dom"), "dom");
    AlgebraSignature cod = signature_from_json(require_field(j, "cod"), "cod");
    const Json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != dom.dimension() * cod.dimension()) {
        throw Error(ErrorKind::ParseError,
                    "coeffs must hold dim(cod) x dim(dom) = " +
                        std::to_string(cod.dimension() * dom.dimension()) + " entries");
    }
    std::vector<Complex> entries;
    entries.reserve(coeffs.size());
    for (const Json& entry : coeffs) {
        entries.push_back(pair_from_json(entry));
    }
    ComplexMatrix matrix(cod.dimension(), dom.dimension(), std::move(entries));
    return LinMap(std::move(dom), std::move(cod), std::move(matrix));
}

Json dist_to_json(const Dist& d) {
    return Json{{"weights", d.weights()}};
}

Dist dist_from_json(const Json& j) {
    const Json& weights = require_field(j, "weights");
    if (!weights.is_array() || weights.empty()) {
        throw Error(ErrorKind::ParseError, "weights must be a nonempty array");
    }
    std::vector<double> w;
    w.reserve(weights.size());
    for (const Json& entry : weights) {
        if (!entry.is_number()) {
            throw Error(ErrorKind::ParseError, "weights must be numbers");
        }
        w.push_back(entry.get<double>());
    }
    return Dist(std::move(w));
}

Json function_map_to_json(const FunctionMap& f) {
    return Json{
        {"dom_size", f.dom_size()},
        {"cod_size", f.cod_size()},
        {"table", f.table()},
    };
}

FunctionMap function_map_from_json(const Json& j) {
    const Json& dom = require_field(j, "dom_size");
    const Json& cod = require_field(j, "cod_size");
    const Json& table = require_field(j, "table");
    if (!dom.is_number_unsigned() || !cod.is_number_unsigned() || !table.is_array()) {
        throw Error(ErrorKind::ParseError, "function map needs dom_size, cod_size, table");
    }
    std::vector<std::size_t> entries;
    entries.reserve(table.size());
    for (const Json& value : table) {
        if (!value.is_number_unsigned()) {
            throw Error(ErrorKind::ParseError, "table entries must be nonnegative integers");
        }
        entries.push_back(value.get<std::size_t>());
    }
    return FunctionMap(dom.get<std::size_t>(), cod.get<std::size_t>(), std::move(entries));
}

std::string kleisli_to_csv(const KleisliMap& f) {
    std::string out;
    for (std::size_t i = 0; i < f.dom_size(); ++i) {
        for (std::size_t j = 0; j < f.cod_size(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += format_double(f(i, j));
        }
        out += "\n";
    }
    return out;
}

KleisliMap kleisli_from_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                const double value = std::stod(cell, &used);
                while (used < cell.size() &&
                       (cell[used] == ' ' || cell[used] == '\t' || cell[used] == '\r')) {
                    ++used;
                }
                if (used != cell.size()) {
                    throw Error(ErrorKind::ParseError, "trailing characters in CSV cell");
                }
                row.push_back(value);
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "CSV cell \"" + cell + "\" is not a number");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(ErrorKind::ParseError, "CSV rows have different lengths");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw Error(ErrorKind::ParseError, "CSV file holds no rows");
    }
    std::vector<double> entries;
    entries.reserve(rows.size() * rows.front().size());
    for (const std::vector<double>& row : rows) {
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return KleisliMap(rows.size(), rows.front().size(), std::move(entries));
}

Json map_class_to_json(const MapClass& cls) {
    return Json{
        {"unital", cls.unital},
        {"involutive", cls.involutive},
        {"multiplicative", cls.multiplicative},
        {"positive", positivity_name(cls.positive)},
        {"completely_positive", complete_positivity_name(cls.completely_positive)},
        {"miu", cls.is_miu()},
        {"pu", cls.is_pu()},
    };
}

Json norm_bound_report_to_json(const NormBoundReport& report) {
    return Json{
        {"trials", report.trials},
        {"max_ratio", report.max_ratio},
        {"within_four", report.within_four},
        {"within_one", report.within_one},
    };
}

Json triangle_report_to_json(const TriangleReport& report) {
    Json checks = Json::array();
    for (const TriangleCheck& check : report.checks) {
        checks.push_back(Json{
            {"name", check.name},
            {"residual", check.residual},
            {"tolerance", check.tolerance},
            {"pass", check.pass},
        });
    }
    return Json{
        {"algebra", report.algebra.blocks()},
        {"checks", std::move(checks)},
        {"pass", report.all_pass()},
    };
}

Json stat_functor_report_to_json(const StatFunctorReport& report) {
    return Json{
        {"dom", report.dom.blocks()},
        {"cod", report.cod.blocks()},
        {"trials", report.trials},
        // Null when faithfulness was vacuous (one-dimensional domain).
        {"min_separation", std::isfinite(report.min_separation)
                               ? Json(report.min_separation)
                               : Json(nullptr)},
        {"separation_threshold", report.separation_threshold},
        {"max_reconstruction_residual", report.max_reconstruction_residual},
        {"reconstruction_tolerance", report.reconstruction_tolerance},
        {"faithful_pass", report.faithful_pass},
        {"full_pass", report.full_pass},
        {"pass", report.pass()},
    };
}

Json emod_check_report_to_json(const EModCheckReport& report) {
    return Json{
        {"trials", report.trials},
        {"unit_residual", report.unit_residual},
        {"max_additivity_residual", report.max_additivity_residual},
        {"max_scalar_residual", report.max_scalar_residual},
        {"violations", report.violations},
        {"pass", report.passed()},
    };
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void dump_value(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            break;
        case Json::value_t::number_float: out += format_double(j.get<double>()); break;
        case Json::value_t::string: append_escaped(out, j.get<std::string>()); break;
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            bool first = true;
            for (const Json& item : j) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad_in;
                dump_value(item, out, indent + 1);
            }
            out += "\n" + pad + "]";
            break;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.cbegin(); it != j.cend(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad_in;
                append_escaped(out, it.key());
                out += ": ";
                dump_value(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            break;
        }
        default: out += "null";
    }
}

}  // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump_value(j, out, 0);
    out += "\n";
    return out;
}

Json load_json_file(const std::string& path) {
    const std::string text = load_text_file(path);
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    }
    out << content;
}

}  // namespace gelfand
