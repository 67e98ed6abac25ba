#include "hopfchar/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hopfchar {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

struct LineReader {
    std::vector<std::string> lines;
    std::string origin;
    std::size_t next = 0;

    LineReader(std::istream& in, std::string org) : origin(std::move(org)) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    [[noreturn]] void fail(std::size_t lineno, const std::string& msg) const {
        throw parse_error(origin + ":" + std::to_string(lineno) + ": " + msg);
    }

    bool skippable(const std::string& line) const {
        std::string t = trim(line);
        return t.empty() || t[0] == '#';
    }

    // next meaningful line, or empty optional at EOF
    bool peek(std::size_t& lineno, std::string& content) {
        while (next < lines.size() && skippable(lines[next])) ++next;
        if (next >= lines.size()) return false;
        lineno = next + 1;
        content = lines[next];
        return true;
    }

    void advance() { ++next; }
};

// "key: value" -> value, or empty optional
bool header_value(const std::string& line, const std::string& key, std::string& value) {
    std::string t = trim(line);
    if (t.rfind(key + ":", 0) != 0) return false;
    value = trim(t.substr(key.size() + 1));
    return true;
}

int parse_int(const std::string& s, const LineReader& lr, std::size_t lineno) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) lr.fail(lineno, "malformed integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        lr.fail(lineno, "malformed integer '" + s + "'");
    }
}

struct Headers {
    std::string basis;
    std::vector<std::string> alphabet;
    TargetSpec target;
    int truncation = -1;
    FunctionalKind kind = FunctionalKind::general;
    bool have_kind = false;
};

// reads header lines until the first non-header line
Headers read_headers(LineReader& lr, bool need_kind) {
    Headers h;
    std::size_t lineno;
    std::string line, value;
    bool have_target = false;
    while (lr.peek(lineno, line)) {
        if (header_value(line, "basis", value)) {
            h.basis = value;
            if (h.basis != "trees" && h.basis != "words")
                lr.fail(lineno, "unknown basis '" + value + "'");
        } else if (header_value(line, "alphabet", value)) {
            for (const std::string& sym : split(value, ',')) {
                std::string s = trim(sym);
                if (s.empty()) lr.fail(lineno, "empty alphabet symbol");
                h.alphabet.push_back(s);
            }
        } else if (header_value(line, "target", value)) {
            try {
                h.target = TargetSpec::parse(value);
            } catch (const parse_error& e) {
                lr.fail(lineno, e.what());
            }
            have_target = true;
        } else if (header_value(line, "truncation", value)) {
            h.truncation = parse_int(value, lr, lineno);
            if (h.truncation < 0) lr.fail(lineno, "truncation must be >= 0");
        } else if (header_value(line, "kind", value)) {
            try {
                h.kind = kind_from_name(value);
            } catch (const parse_error& e) {
                lr.fail(lineno, e.what());
            }
            h.have_kind = true;
        } else {
            break; // first data line
        }
        lr.advance();
    }
    std::size_t at = lr.next < lr.lines.size() ? lr.next + 1 : lr.lines.size();
    if (h.basis.empty()) lr.fail(at, "missing 'basis:' header");
    if (!have_target) lr.fail(at, "missing 'target:' header");
    if (h.truncation < 0) lr.fail(at, "missing 'truncation:' header");
    if (need_kind && !h.have_kind) lr.fail(at, "missing 'kind:' header");
    if (h.basis == "words" && h.alphabet.empty()) lr.fail(at, "words basis needs an 'alphabet:' header");
    return h;
}

template <class Basis, class Alg>
Functional<Basis, Alg> read_table(LineReader& lr, std::shared_ptr<const Basis> basis, Alg alg,
                                  int truncation, FunctionalKind kind) {
    typename Functional<Basis, Alg>::Table table;
    std::size_t lineno;
    std::string line;
    while (lr.peek(lineno, line)) {
        if (line.find(':') != std::string::npos && line.find('\t') == std::string::npos)
            break; // next section header (curve files)
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) lr.fail(lineno, "expected 'monomial<TAB>value'");
        std::string mono_text = trim(line.substr(0, tab));
        std::string value_text = trim(line.substr(tab + 1));
        try {
            auto m = basis->monomial_from_text(mono_text);
            if (Basis::degree(m) > truncation)
                lr.fail(lineno, "monomial degree exceeds the declared truncation");
            if (table.count(m)) lr.fail(lineno, "duplicate monomial '" + mono_text + "'");
            table.emplace(m, alg.from_text(value_text));
        } catch (const parse_error& e) {
            lr.fail(lineno, e.what());
        }
        lr.advance();
    }
    try {
        return Functional<Basis, Alg>(std::move(basis), std::move(alg), truncation, kind,
                                      std::move(table));
    } catch (const domain_error& e) {
        throw parse_error(lr.origin + ": " + e.what());
    }
}

} // namespace

TargetSpec TargetSpec::parse(const std::string& text) {
    std::string t = trim(text);
    TargetSpec spec;
    if (t == "rational") {
        spec.kind = Kind::rational;
        return spec;
    }
    if (t == "complex-rational") {
        spec.kind = Kind::complex_rational;
        return spec;
    }
    auto parse_paren = [&](const std::string& head) -> std::vector<std::string> {
        std::string rest = t.substr(head.size());
        if (rest.empty()) return {};
        if (rest.front() != '(' || rest.back() != ')')
            throw parse_error("malformed target '" + t + "'");
        return split(rest.substr(1, rest.size() - 2), ',');
    };
    if (t.rfind("complex-float", 0) == 0) {
        spec.kind = Kind::complex_floating;
        auto args = parse_paren("complex-float");
        if (args.size() == 1)
            spec.tol = detail::double_from_text(trim(args[0]));
        else if (!args.empty())
            throw parse_error("malformed target '" + t + "'");
        return spec;
    }
    if (t.rfind("float", 0) == 0) {
        spec.kind = Kind::floating;
        auto args = parse_paren("float");
        if (args.size() == 1)
            spec.tol = detail::double_from_text(trim(args[0]));
        else if (!args.empty())
            throw parse_error("malformed target '" + t + "'");
        return spec;
    }
    if (t.rfind("laurent", 0) == 0) {
        spec.kind = Kind::laurent;
        auto args = parse_paren("laurent");
        if (args.size() != 2) throw parse_error("laurent target needs (P,M)");
        try {
            spec.pole_bound = std::stoi(trim(args[0]));
            spec.max_exp = std::stoi(trim(args[1]));
        } catch (const std::exception&) {
            throw parse_error("malformed laurent parameters in '" + t + "'");
        }
        if (spec.pole_bound < 0 || spec.max_exp < 0)
            throw parse_error("laurent parameters must be >= 0");
        return spec;
    }
    throw parse_error("unknown target '" + t + "'");
}

std::string TargetSpec::to_text() const {
    switch (kind) {
        case Kind::rational: return "rational";
        case Kind::complex_rational: return "complex-rational";
        case Kind::floating:
            return tol == 1e-9 ? "float" : "float(" + detail::double_to_text(tol) + ")";
        case Kind::complex_floating:
            return tol == 1e-9 ? "complex-float" : "complex-float(" + detail::double_to_text(tol) + ")";
        case Kind::laurent:
            return "laurent(" + std::to_string(pole_bound) + "," + std::to_string(max_exp) + ")";
    }
    return "?";
}

AnyFunctional read_character(std::istream& in, const std::string& origin) {
    LineReader lr(in, origin);
    Headers h = read_headers(lr, /*need_kind=*/true);
    if (h.basis == "trees") {
        auto basis = std::make_shared<const TreeBasis>(h.truncation);
        switch (h.target.kind) {
            case TargetSpec::Kind::rational:
                return read_table(lr, basis, RationalAlgebra{}, h.truncation, h.kind);
            case TargetSpec::Kind::floating:
                return read_table(lr, basis, FloatAlgebra{h.target.tol}, h.truncation, h.kind);
            case TargetSpec::Kind::laurent:
                return read_table(lr, basis, LaurentAlgebra(h.target.pole_bound, h.target.max_exp),
                                  h.truncation, h.kind);
            default:
                throw parse_error(origin + ": trees basis supports rational, float or laurent targets");
        }
    }
    auto basis = std::make_shared<const WordBasis>(h.alphabet, h.truncation);
    switch (h.target.kind) {
        case TargetSpec::Kind::complex_rational:
            return read_table(lr, basis, ComplexRationalAlgebra{}, h.truncation, h.kind);
        case TargetSpec::Kind::complex_floating:
            return read_table(lr, basis, ComplexFloatAlgebra{h.target.tol}, h.truncation, h.kind);
        default:
            throw parse_error(origin + ": words basis supports complex-rational or complex-float targets");
    }
}

AnyFunctional read_character_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_character(in, path);
}

namespace {

template <class Alg>
TargetSpec target_spec_of(const Alg& alg) {
    TargetSpec spec;
    if constexpr (std::is_same_v<Alg, RationalAlgebra>) {
        spec.kind = TargetSpec::Kind::rational;
    } else if constexpr (std::is_same_v<Alg, FloatAlgebra>) {
        spec.kind = TargetSpec::Kind::floating;
        spec.tol = alg.tol;
    } else if constexpr (std::is_same_v<Alg, ComplexRationalAlgebra>) {
        spec.kind = TargetSpec::Kind::complex_rational;
    } else if constexpr (std::is_same_v<Alg, ComplexFloatAlgebra>) {
        spec.kind = TargetSpec::Kind::complex_floating;
        spec.tol = alg.tol;
    } else {
        spec.kind = TargetSpec::Kind::laurent;
        spec.pole_bound = alg.pole_bound;
        spec.max_exp = alg.max_exp;
    }
    return spec;
}

} // namespace

template <class Basis, class Alg>
void write_character_typed(std::ostream& out, const Functional<Basis, Alg>& f) {
    out << "basis: " << f.basis().name() << "\n";
    if constexpr (std::is_same_v<Basis, WordBasis>) {
        out << "alphabet: ";
        const auto& alpha = f.basis().alphabet();
        for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? "," : "") << alpha[i];
        out << "\n";
    }
    out << "target: " << target_spec_of(f.alg()).to_text() << "\n";
    out << "truncation: " << f.truncation() << "\n";
    out << "kind: " << kind_name(f.kind()) << "\n";
    for (const auto& [m, v] : f.values())
        out << f.basis().monomial_to_text(m) << "\t" << f.alg().to_text(v) << "\n";
}

template void write_character_typed(std::ostream&, const TreeRatFn&);
template void write_character_typed(std::ostream&, const TreeFloatFn&);
template void write_character_typed(std::ostream&, const TreeLaurentFn&);
template void write_character_typed(std::ostream&, const WordCRatFn&);
template void write_character_typed(std::ostream&, const WordCFloatFn&);

void write_character(std::ostream& out, const AnyFunctional& f) {
    std::visit([&](const auto& typed) { write_character_typed(out, typed); }, f);
}

void write_character_file(const std::string& path, const AnyFunctional& f) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    write_character(out, f);
}

std::string character_to_text(const AnyFunctional& f) {
    std::ostringstream oss;
    write_character(oss, f);
    return oss.str();
}

RKMethod read_rk_method(std::istream& in, const std::string& origin) {
    LineReader lr(in, origin);
    std::size_t lineno;
    std::string line;
    if (!lr.peek(lineno, line)) throw parse_error(origin + ": empty tableau file");
    auto head = split_ws(line);
    if (head.size() != 1) lr.fail(lineno, "expected the stage count alone on the first line");
    RKMethod m;
    m.stages = parse_int(head[0], lr, lineno);
    if (m.stages < 1) lr.fail(lineno, "stage count must be >= 1");
    lr.advance();

    auto read_row = [&](const char* what) {
        std::size_t ln;
        std::string content;
        if (!lr.peek(ln, content))
            throw parse_error(origin + ": unexpected end of file while reading " + what);
        auto toks = split_ws(content);
        if ((int)toks.size() != m.stages)
            lr.fail(ln, std::string(what) + ": expected " + std::to_string(m.stages) + " entries, got " +
                            std::to_string(toks.size()));
        std::vector<Rat> row;
        for (const auto& tok : toks) {
            try {
                row.push_back(rat_from_text(tok));
            } catch (const parse_error& e) {
                lr.fail(ln, e.what());
            }
        }
        lr.advance();
        return row;
    };
    for (int i = 0; i < m.stages; ++i) m.A.push_back(read_row("A row"));
    m.b = read_row("b row");
    m.c = read_row("c row");
    if (lr.peek(lineno, line)) lr.fail(lineno, "trailing content after the tableau");
    m.validate();
    return m;
}

RKMethod read_rk_method_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_rk_method(in, path);
}

PolyCurve<TreeBasis, RationalAlgebra> read_curve(std::istream& in, const std::string& origin) {
    LineReader lr(in, origin);
    Headers h = read_headers(lr, /*need_kind=*/false);
    if (h.basis != "trees" || h.target.kind != TargetSpec::Kind::rational)
        throw parse_error(origin + ": curve files use the trees basis with the rational target");
    auto basis = std::make_shared<const TreeBasis>(h.truncation);
    RationalAlgebra alg;

    std::size_t lineno;
    std::string line, value;
    if (!lr.peek(lineno, line) || !header_value(line, "breakpoints", value))
        throw parse_error(origin + ": missing 'breakpoints:' header");
    std::vector<Rat> breakpoints;
    for (const auto& tok : split(value, ',')) {
        try {
            breakpoints.push_back(rat_from_text(trim(tok)));
        } catch (const parse_error& e) {
            lr.fail(lineno, e.what());
        }
    }
    lr.advance();

    using Fn = Functional<TreeBasis, RationalAlgebra>;
    std::vector<std::vector<Fn>> pieces;
    while (lr.peek(lineno, line)) {
        if (!header_value(line, "piece", value)) lr.fail(lineno, "expected 'piece: <index>'");
        int idx = parse_int(value, lr, lineno);
        if (idx != (int)pieces.size())
            lr.fail(lineno, "pieces must appear in order; expected " + std::to_string(pieces.size()));
        lr.advance();
        std::vector<Fn> coeffs;
        while (lr.peek(lineno, line) && header_value(line, "coeff", value)) {
            int power = parse_int(value, lr, lineno);
            if (power < 0) lr.fail(lineno, "coefficient power must be >= 0");
            lr.advance();
            Fn fn = read_table(lr, basis, alg, h.truncation, FunctionalKind::infinitesimal);
            while ((int)coeffs.size() <= power)
                coeffs.push_back(Fn::zero(basis, alg, h.truncation, FunctionalKind::infinitesimal));
            coeffs[power] = std::move(fn);
        }
        if (coeffs.empty())
            coeffs.push_back(Fn::zero(basis, alg, h.truncation, FunctionalKind::infinitesimal));
        pieces.push_back(std::move(coeffs));
    }
    try {
        return PolyCurve<TreeBasis, RationalAlgebra>(std::move(breakpoints), std::move(pieces));
    } catch (const domain_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

PolyCurve<TreeBasis, RationalAlgebra> read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_curve(in, path);
}

NuMatrix read_nu(std::istream& in, const std::string& origin) {
    LineReader lr(in, origin);
    std::size_t lineno;
    std::string line, value;
    if (!lr.peek(lineno, line) || !header_value(line, "d", value))
        throw parse_error(origin + ": missing 'd: <rows>' header");
    int d = parse_int(value, lr, lineno);
    if (d < 1) lr.fail(lineno, "d must be >= 1");
    lr.advance();
    NuMatrix nu;
    for (int k = 0; k < d; ++k) {
        if (!lr.peek(lineno, line))
            throw parse_error(origin + ": expected " + std::to_string(d) + " nu rows");
        std::vector<CRat> row;
        for (const auto& tok : split_ws(line)) {
            try {
                row.push_back(crat_from_text(tok));
            } catch (const parse_error& e) {
                lr.fail(lineno, e.what());
            }
        }
        nu.entries.push_back(std::move(row));
        lr.advance();
    }
    if (lr.peek(lineno, line)) lr.fail(lineno, "trailing content after the nu rows");
    try {
        nu.validate(nu.alphabet_size());
    } catch (const domain_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    return nu;
}

NuMatrix read_nu_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_nu(in, path);
}

ForestElement parse_forest_element(const std::string& text) {
    ForestElement out;
    for (const auto& token : split_ws(text)) {
        if (token == "+") continue;
        std::size_t star = token.find('*');
        Rat coeff(1);
        std::string mono = token;
        if (star != std::string::npos) {
            coeff = rat_from_text(token.substr(0, star));
            mono = token.substr(star + 1);
        }
        out.add_term(forest_from_text(mono), coeff);
    }
    return out;
}

std::vector<CRat> parse_crat_vector(const std::string& text) {
    std::vector<CRat> out;
    for (const auto& tok : split(text, ',')) out.push_back(crat_from_text(trim(tok)));
    return out;
}

} // namespace hopfchar
