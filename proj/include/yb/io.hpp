#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "yb/algebra.hpp"
#include "yb/coalgebra.hpp"
#include "yb/errors.hpp"
#include "yb/matrix.hpp"
#include "yb/rack.hpp"
#include "yb/report.hpp"
#include "yb/ybe.hpp"

namespace yb {

// Deterministic serialization: ordered maps, exact rational strings, no
// floats, no timestamps. Re-exporting the same object yields identical bytes.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Files.

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline Json parse_json_file(const std::string& path) {
    return parse_json_text(read_text_file(path), path);
}

// FNV-1a over bytes; used to stamp exports with the identity of their input.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& ctx) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(ctx + ": missing field '" + key + "'");
    return *it;
}

inline long int_field(const Json& j, const char* key, const std::string& ctx) {
    const Json& f = field(j, key, ctx);
    if (!f.is_number_integer()) throw ParseError(ctx + ": field '" + key + "' must be an integer");
    return f.get<long>();
}

inline Scalar scalar_of(const Json& j, const std::string& ctx) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(ctx + ": " + e.what());
        }
    }
    throw ParseError(ctx + ": expected a rational as \"p/q\" string or integer");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrices. JSON: {"rows": R, "cols": C, "entries": [[...row...], ...]} with
// exact rational strings; CSV: one row per line, comma-separated rationals.

inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    Json out;
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    out["entries"] = std::move(rows);
    return out;
}

inline Mat matrix_from_json(const Json& j, const std::string& ctx = "matrix") {
    const long rows = detail::int_field(j, "rows", ctx);
    const long cols = detail::int_field(j, "cols", ctx);
    if (rows < 0 || cols < 0) throw ParseError(ctx + ": negative dimensions");
    const Json& entries = detail::field(j, "entries", ctx);
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows)
        throw ParseError(ctx + ": 'entries' must be an array of " + std::to_string(rows) +
                         " rows");
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != cols)
            throw ParseError(ctx + ": row " + std::to_string(i + 1) + " must have " +
                             std::to_string(cols) + " entries");
        for (long j2 = 0; j2 < cols; ++j2)
            m.at(i, j2) = detail::scalar_of(row[static_cast<size_t>(j2)],
                                            ctx + " entry (" + std::to_string(i + 1) + "," +
                                                std::to_string(j2 + 1) + ")");
    }
    return m;
}

inline std::string matrix_to_csv(const Mat& m) {
    std::string out;
    for (long i = 0; i < m.rows; ++i) {
        for (long j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

inline Mat matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Scalar>> rows;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<Scalar> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(Scalar::parse(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("csv line " + std::to_string(lineno) + ": expected " +
                             std::to_string(rows.front().size()) + " cells, got " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    Mat m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

// ---------------------------------------------------------------------------
// Algebras. JSON:
//   {"dim": n, "arity": 2 or 3,
//    "brackets": [{"in": [i, j(, k)], "out": [{"basis": l, "coeff": "p/q"}]}]}
// with 1-based basis indices; absent brackets are zero.

using AnyAlgebra = std::variant<LeibnizAlgebra, ThreeLeibnizAlgebra>;

inline Json algebra_to_json(const LeibnizAlgebra& e) {
    Json brackets = Json::array();
    for (long i = 0; i < e.dim; ++i)
        for (long j = 0; j < e.dim; ++j) {
            const SparseVec b = e.bracket_basis(i, j);
            if (b.empty()) continue;
            Json entry;
            entry["in"] = Json::array({i + 1, j + 1});
            Json out = Json::array();
            for (const auto& [l, c] : b) out.push_back(Json{{"basis", l + 1}, {"coeff", c.str()}});
            entry["out"] = std::move(out);
            brackets.push_back(std::move(entry));
        }
    Json out;
    out["dim"] = e.dim;
    out["arity"] = 2;
    out["brackets"] = std::move(brackets);
    return out;
}

inline Json algebra_to_json(const ThreeLeibnizAlgebra& l) {
    Json brackets = Json::array();
    for (long i = 0; i < l.dim; ++i)
        for (long j = 0; j < l.dim; ++j)
            for (long k = 0; k < l.dim; ++k) {
                const SparseVec b = l.bracket_basis(i, j, k);
                if (b.empty()) continue;
                Json entry;
                entry["in"] = Json::array({i + 1, j + 1, k + 1});
                Json out = Json::array();
                for (const auto& [m, c] : b)
                    out.push_back(Json{{"basis", m + 1}, {"coeff", c.str()}});
                entry["out"] = std::move(out);
                brackets.push_back(std::move(entry));
            }
    Json out;
    out["dim"] = l.dim;
    out["arity"] = 3;
    out["brackets"] = std::move(brackets);
    return out;
}

inline Json algebra_to_json(const AnyAlgebra& a) {
    return std::visit([](const auto& x) { return algebra_to_json(x); }, a);
}

inline AnyAlgebra algebra_from_json(const Json& j, const std::string& ctx = "algebra") {
    const long dim = detail::int_field(j, "dim", ctx);
    const long arity = detail::int_field(j, "arity", ctx);
    if (dim <= 0) throw ParseError(ctx + ": 'dim' must be positive");
    if (arity != 2 && arity != 3) throw ParseError(ctx + ": 'arity' must be 2 or 3");
    const Json& brackets = detail::field(j, "brackets", ctx);
    if (!brackets.is_array()) throw ParseError(ctx + ": 'brackets' must be an array");

    auto read_into = [&](auto& alg) {
        for (const auto& entry : brackets) {
            const std::string ectx = ctx + " bracket";
            const Json& in = detail::field(entry, "in", ectx);
            if (!in.is_array() || static_cast<long>(in.size()) != arity)
                throw ParseError(ectx + ": 'in' must list " + std::to_string(arity) +
                                 " basis indices");
            std::vector<long> idx;
            for (const auto& v : in) {
                if (!v.is_number_integer()) throw ParseError(ectx + ": indices must be integers");
                const long i = v.get<long>();
                if (i < 1 || i > dim)
                    throw ParseError(ectx + ": basis index " + std::to_string(i) +
                                     " out of range 1.." + std::to_string(dim));
                idx.push_back(i - 1);
            }
            const Json& out = detail::field(entry, "out", ectx);
            if (!out.is_array()) throw ParseError(ectx + ": 'out' must be an array");
            for (const auto& term : out) {
                const long basis = detail::int_field(term, "basis", ectx);
                if (basis < 1 || basis > dim)
                    throw ParseError(ectx + ": output basis index " + std::to_string(basis) +
                                     " out of range 1.." + std::to_string(dim));
                const Scalar c = detail::scalar_of(detail::field(term, "coeff", ectx), ectx);
                if (arity == 2)
                    alg.c[static_cast<size_t>((idx[0] * dim + idx[1]) * dim + basis - 1)] += c;
                else
                    alg.c[static_cast<size_t>(
                        (((idx[0] * dim + idx[1]) * dim + idx[2]) * dim) + basis - 1)] += c;
            }
        }
    };

    if (arity == 2) {
        LeibnizAlgebra e;
        e.dim = dim;
        e.c.assign(static_cast<size_t>(dim) * dim * dim, Scalar(0));
        read_into(e);
        return e;
    }
    ThreeLeibnizAlgebra l;
    l.dim = dim;
    l.c.assign(static_cast<size_t>(dim) * dim * dim * dim, Scalar(0));
    read_into(l);
    return l;
}

// ---------------------------------------------------------------------------
// Finite racks. JSON: {"size": n, "arity": 2 or 3, "table": [...]} with the
// flat operation table in 0-based values, row-major (x*n+y, resp.
// (x*n+y)*n+z).

using AnyRack = std::variant<FiniteRack, Finite3Rack>;

inline Json rack_to_json(const FiniteRack& r) {
    Json out;
    out["size"] = r.size;
    out["arity"] = 2;
    out["table"] = r.table;
    return out;
}

inline Json rack_to_json(const Finite3Rack& r) {
    Json out;
    out["size"] = r.size;
    out["arity"] = 3;
    out["table"] = r.table;
    return out;
}

inline Json rack_to_json(const AnyRack& r) {
    return std::visit([](const auto& x) { return rack_to_json(x); }, r);
}

inline AnyRack rack_from_json(const Json& j, const std::string& ctx = "rack") {
    const long size = detail::int_field(j, "size", ctx);
    const long arity = detail::int_field(j, "arity", ctx);
    if (size <= 0) throw ParseError(ctx + ": 'size' must be positive");
    if (arity != 2 && arity != 3) throw ParseError(ctx + ": 'arity' must be 2 or 3");
    const Json& table = detail::field(j, "table", ctx);
    const size_t want =
        arity == 2 ? static_cast<size_t>(size) * size : static_cast<size_t>(size) * size * size;
    if (!table.is_array() || table.size() != want)
        throw ParseError(ctx + ": 'table' must hold exactly " + std::to_string(want) +
                         " values");
    std::vector<long> cells;
    cells.reserve(want);
    for (const auto& v : table) {
        if (!v.is_number_integer()) throw ParseError(ctx + ": table values must be integers");
        cells.push_back(v.get<long>());
    }
    if (arity == 2) {
        FiniteRack r;
        r.size = size;
        r.table = std::move(cells);
        return r;
    }
    Finite3Rack r;
    r.size = size;
    r.table = std::move(cells);
    return r;
}

// ---------------------------------------------------------------------------
// Coalgebras and (tri)linear rack structures.

inline Json coalgebra_to_json(const Coalgebra& c) {
    Json out;
    out["dim"] = c.dim;
    out["delta"] = matrix_to_json(c.delta);
    out["counit"] = matrix_to_json(c.counit);
    return out;
}

inline Coalgebra coalgebra_from_json(const Json& j, const std::string& ctx = "coalgebra") {
    Coalgebra c;
    c.dim = detail::int_field(j, "dim", ctx);
    if (c.dim <= 0) throw ParseError(ctx + ": 'dim' must be positive");
    c.delta = matrix_from_json(detail::field(j, "delta", ctx), ctx + ".delta");
    c.counit = matrix_from_json(detail::field(j, "counit", ctx), ctx + ".counit");
    return c;
}

inline Json linear_rack_to_json(const LinearRackStruct& lr) {
    Json out;
    out["coalgebra"] = coalgebra_to_json(lr.coalg);
    out["op"] = matrix_to_json(lr.op);
    out["tilde"] = matrix_to_json(lr.tilde);
    return out;
}

inline LinearRackStruct linear_rack_from_json(const Json& j,
                                              const std::string& ctx = "linear rack") {
    LinearRackStruct lr;
    lr.coalg = coalgebra_from_json(detail::field(j, "coalgebra", ctx), ctx + ".coalgebra");
    lr.op = matrix_from_json(detail::field(j, "op", ctx), ctx + ".op");
    lr.tilde = matrix_from_json(detail::field(j, "tilde", ctx), ctx + ".tilde");
    return lr;
}

inline Json trilinear_rack_to_json(const TrilinearRackStruct& tr) {
    Json out;
    out["coalgebra"] = coalgebra_to_json(tr.coalg);
    out["t"] = matrix_to_json(tr.t);
    out["ttilde"] = matrix_to_json(tr.ttilde);
    return out;
}

inline TrilinearRackStruct trilinear_rack_from_json(const Json& j,
                                                    const std::string& ctx = "trilinear rack") {
    TrilinearRackStruct tr;
    tr.coalg = coalgebra_from_json(detail::field(j, "coalgebra", ctx), ctx + ".coalgebra");
    tr.t = matrix_from_json(detail::field(j, "t", ctx), ctx + ".t");
    tr.ttilde = matrix_from_json(detail::field(j, "ttilde", ctx), ctx + ".ttilde");
    return tr;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json report_to_json(const VerificationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json entry;
        entry["rule"] = v.rule;
        entry["where"] = v.where;
        entry["detail"] = v.detail;
        violations.push_back(std::move(entry));
    }
    Json out;
    out["subject"] = r.subject;
    out["cases"] = r.cases;
    out["ok"] = r.ok();
    out["index_base"] = 1;
    out["violations"] = std::move(violations);
    return out;
}

inline Json diff_to_json(const DiffReport& d) {
    Json cells = Json::array();
    for (const auto& c : d.cells) {
        Json entry;
        entry["row"] = c.row;
        entry["col"] = c.col;
        entry["computed"] = c.computed;
        entry["reference"] = c.reference;
        if (!c.note.empty()) entry["note"] = c.note;
        cells.push_back(std::move(entry));
    }
    Json out;
    out["rows"] = d.rows;
    out["cols"] = d.cols;
    out["index_base"] = 1;
    out["cells"] = std::move(cells);
    return out;
}

// ---------------------------------------------------------------------------
// Operator export. The provenance header records which builder produced the
// operator, a hash of the input it was built from, and the basis convention;
// the payload is the dense matrix and its inverse, so the export is
// self-contained and bit-exact under re-serialization.

inline Json operator_to_json(const YbeOperator& r, const std::string& source_bytes,
                             const std::string& source_name) {
    Json prov;
    prov["builder"] = r.provenance;
    prov["source"] = source_name;
    prov["source_hash"] = "fnv1a64:" + fnv1a64_hex(source_bytes);
    prov["basis_order"] =
        "tensor basis ordered lexicographically, left factor most significant; "
        "column j is the image of basis vector j";
    Json out;
    out["provenance"] = std::move(prov);
    out["base_dim"] = r.base_dim;
    out["matrix"] = matrix_to_json(r.matrix());
    out["inverse"] = matrix_to_json(r.inverse_matrix());
    return out;
}

inline std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace yb
