#include "hw/io.hpp"

#include <sstream>

namespace hw::io {

json to_json(const GroupElement& g) { return {{"m", g.m}, {"n", g.n}, {"l", g.l}}; }

json to_json(const IrrepLabel& label) {
    return {{"s", label.s},     {"p", label.p},     {"q", label.q},
            {"r", label.r},     {"t", label.t},     {"dim", label.dim()},
            {"faithful", label.faithful()}};
}

json to_json(const CycInt& value) { return {{"modulus", value.modulus()}, {"coeffs", value.reduced()}}; }

json to_json(const ConjugacyClass& cls) {
    return {{"representative", to_json(cls.representative)}, {"k", cls.k}, {"size", cls.size}};
}

json to_json(const MonomialMatrix& matrix) {
    json entries = json::array();
    for (std::size_t k = 0; k < matrix.dim(); ++k) {
        entries.push_back({{"row", k}, {"col", matrix.sigma[k]}, {"exp", matrix.phase[k]}});
    }
    return {{"dim", matrix.dim()}, {"entries", entries}, {"root_modulus", matrix.root_modulus}};
}

json to_json(const ComplexMatrix& matrix) {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < matrix.dim(); ++j) row.push_back({matrix.at(i, j).real(), matrix.at(i, j).imag()});
        rows.push_back(row);
    }
    return {{"dim", matrix.dim()}, {"entries", rows}};
}

json to_json(const FusionRow& row) {
    json terms = json::array();
    for (const auto& term : row.terms) terms.push_back({{"label", to_json(term.label)}, {"mult", term.multiplicity}});
    return {{"left", to_json(row.left)}, {"right", to_json(row.right)}, {"terms", terms}};
}

json to_json(const CharacterTable& table) {
    json irreps = json::array();
    for (const auto& label : table.irreps) irreps.push_back(to_json(label));
    json classes = json::array();
    for (const auto& cls : table.classes) classes.push_back(to_json(cls));
    json values = json::array();
    for (const auto& row : table.values) {
        json out = json::array();
        for (const auto& v : row) out.push_back({{"scale", v.scale}, {"exp", v.exponent}});
        values.push_back(out);
    }
    return {{"s", table.s},
            {"root_modulus", std::uint64_t{1} << table.s},
            {"irreps", irreps},
            {"classes", classes},
            {"values", values}};
}

json to_json(const FourierReport& report) {
    json orientations = json::array();
    for (auto o : report.diagonalizing) orientations.push_back(to_string(o));
    return {{"label", to_json(report.label)},
            {"passed", report.passed()},
            {"diagonalizing_orientations", orientations},
            {"relation_orientation", report.diagonalizing.empty() ? json(nullptr)
                                                                  : json(to_string(report.relation_orientation))},
            {"residuals",
             {{"unitarity_fd", report.unitarity_fd},
              {"unitarity_standard", report.unitarity_std},
              {"unitarity_omega", report.unitarity_omega},
              {"fourier_fourth_power", report.fourth_power},
              {"eigen", report.eigen},
              {"offdiag_forward", report.offdiag_forward},
              {"offdiag_backward", report.offdiag_backward},
              {"conjugation_relation", report.conjugation_relation},
              {"conjugation_relation_direct", report.conjugation_relation_direct}}}};
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string irreps_csv(const std::vector<IrrepLabel>& irreps) {
    std::ostringstream os;
    os << "s,p,q,r,t,dim,faithful\n";
    for (const auto& L : irreps) {
        os << L.s << ',' << L.p << ',' << L.q << ',' << L.r << ',' << L.t << ',' << L.dim() << ','
           << (L.faithful() ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string classes_csv(const std::vector<ConjugacyClass>& classes) {
    std::ostringstream os;
    os << "m,n,l,k,size\n";
    for (const auto& c : classes) {
        os << c.representative.m << ',' << c.representative.n << ',' << c.representative.l << ',' << c.k << ','
           << c.size << '\n';
    }
    return os.str();
}

std::string character_table_csv(const CharacterTable& table) {
    std::ostringstream os;
    os << "class";
    for (const auto& c : table.classes) os << ',' << csv_field(to_string(c.representative));
    os << "\nsize";
    for (const auto& c : table.classes) os << ',' << c.size;
    os << '\n';
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        os << csv_field(to_string(table.irreps[i]));
        for (const auto& v : table.values[i]) os << ',' << v.to_string();
        os << '\n';
    }
    return os.str();
}

std::string fusion_rows_csv(const std::vector<FusionRow>& rows) {
    std::ostringstream os;
    os << "left,right,label,mult\n";
    for (const auto& row : rows) {
        for (const auto& term : row.terms) {
            os << csv_field(to_string(row.left)) << ',' << csv_field(to_string(row.right)) << ','
               << csv_field(to_string(term.label)) << ',' << term.multiplicity << '\n';
        }
    }
    return os.str();
}

std::string format_fusion_rule(const FusionRow& row) {
    std::ostringstream os;
    os << '[' << to_string(row.left) << "] x [" << to_string(row.right) << "] =";
    bool first = true;
    for (const auto& term : row.terms) {
        os << (first ? " " : " + ");
        first = false;
        if (term.multiplicity != 1) os << term.multiplicity;
        os << '[' << to_string(term.label) << ']';
    }
    return os.str();
}

std::string format_orbit(const Orbit& orbit) {
    std::ostringstream os;
    os << "Orb(" << orbit.p << ',' << orbit.representative_q << ") = {";
    for (std::size_t i = 0; i < orbit.members.size(); ++i) os << (i ? "," : "") << orbit.members[i];
    os << '}';
    return os.str();
}

} // namespace hw::io
