#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arrbound/rational.hpp"

namespace arrbound {

// A homogeneous linear form in primitive normalized shape: coprime integer
// coefficients, first nonzero entry positive.  Two proportional forms
// normalize to the same value.
struct LinearForm {
    std::vector<Int> coeffs;

    static LinearForm from_rationals(const std::vector<Rational>& v) {
        return LinearForm{detail::primitive_vector(v)};
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs < b.coeffs; }

    std::string str(const std::vector<std::string>& vars) const {
        std::string s;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            Int c = coeffs[i];
            if (c == 0) continue;
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            Int mag = c < 0 ? -c : c;
            if (mag != 1) s += std::to_string(mag);
            s += vars[i];
        }
        return s;
    }
};

// Central arrangement given by distinct linear forms in 3 or 4 variables.
struct Arrangement {
    int ambient_dim = 3;
    std::vector<LinearForm> forms;
    std::vector<std::string> var_names;
    std::vector<std::string> labels;  // optional display names, empty or one per form

    int d() const { return static_cast<int>(forms.size()); }
    friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

struct parse_error : std::runtime_error {
    enum class kind { syntax, non_homogeneous, zero_form, duplicate_hyperplane, bad_variable_count };
    kind error_kind;
    int line;
    int column;

    parse_error(kind k, int ln, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ", col " + std::to_string(col) + ": " + msg),
          error_kind(k),
          line(ln),
          column(col) {}
};

struct unknown_example : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Token {
    enum class type { number, ident, plus, minus, star, lbracket, rbracket, comma, end };
    type t;
    Rational value;     // number
    std::string text;   // ident
    int column;
};

inline std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            Int num = std::stoll(std::string(line.substr(i, j - i)));
            Int den = 1;
            if (j < line.size() && line[j] == '/') {
                size_t k = j + 1;
                size_t k0 = k;
                while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
                if (k == k0)
                    throw parse_error(parse_error::kind::syntax, line_no, static_cast<int>(j) + 2,
                                      "expected denominator digits after '/'");
                den = std::stoll(std::string(line.substr(k0, k - k0)));
                if (den == 0)
                    throw parse_error(parse_error::kind::syntax, line_no, static_cast<int>(k0) + 1,
                                      "zero denominator");
                j = k;
            }
            out.push_back({Token::type::number, Rational(num, den), "", col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Token::type::ident, Rational(0), std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        Token::type t;
        switch (c) {
            case '+': t = Token::type::plus; break;
            case '-': t = Token::type::minus; break;
            case '*': t = Token::type::star; break;
            case '[': t = Token::type::lbracket; break;
            case ']': t = Token::type::rbracket; break;
            case ',': t = Token::type::comma; break;
            default:
                throw parse_error(parse_error::kind::syntax, line_no, col,
                                  std::string("unexpected character '") + c + "'");
        }
        out.push_back({t, Rational(0), "", col});
        ++i;
    }
    out.push_back({Token::type::end, Rational(0), "", static_cast<int>(line.size()) + 1});
    return out;
}

inline std::vector<Rational> parse_form_line(std::string_view line, int line_no,
                                             const std::vector<std::string>& vars) {
    auto toks = tokenize_line(line, line_no);
    const size_t nvars = vars.size();
    std::vector<Rational> coeffs(nvars, Rational(0));
    size_t pos = 0;

    auto var_index = [&](const Token& tk) -> size_t {
        auto it = std::find(vars.begin(), vars.end(), tk.text);
        if (it == vars.end())
            throw parse_error(parse_error::kind::syntax, line_no, tk.column,
                              "unknown variable '" + tk.text + "'");
        return static_cast<size_t>(it - vars.begin());
    };

    if (toks[0].t == Token::type::lbracket) {
        // bracketed coefficient vector: [c1, c2, ...]
        ++pos;
        std::vector<Rational> vals;
        bool first = true;
        while (toks[pos].t != Token::type::rbracket) {
            if (!first) {
                if (toks[pos].t != Token::type::comma)
                    throw parse_error(parse_error::kind::syntax, line_no, toks[pos].column,
                                      "expected ',' or ']'");
                ++pos;
            }
            first = false;
            Rational sign(1);
            if (toks[pos].t == Token::type::minus) {
                sign = Rational(-1);
                ++pos;
            } else if (toks[pos].t == Token::type::plus) {
                ++pos;
            }
            if (toks[pos].t != Token::type::number)
                throw parse_error(parse_error::kind::syntax, line_no, toks[pos].column,
                                  "expected coefficient");
            vals.push_back(sign * toks[pos].value);
            ++pos;
        }
        ++pos;
        if (toks[pos].t != Token::type::end)
            throw parse_error(parse_error::kind::syntax, line_no, toks[pos].column,
                              "trailing input after ']'");
        if (vals.size() != nvars)
            throw parse_error(parse_error::kind::syntax, line_no, toks[0].column,
                              "expected " + std::to_string(nvars) + " coefficients, got " +
                                  std::to_string(vals.size()));
        return vals;
    }

    // sum of signed terms: c, c*v, cv, v
    bool first_term = true;
    while (toks[pos].t != Token::type::end) {
        Rational sign(1);
        if (toks[pos].t == Token::type::plus || toks[pos].t == Token::type::minus) {
            if (toks[pos].t == Token::type::minus) sign = Rational(-1);
            ++pos;
        } else if (!first_term) {
            throw parse_error(parse_error::kind::syntax, line_no, toks[pos].column,
                              "expected '+' or '-' between terms");
        }
        first_term = false;

        if (toks[pos].t == Token::type::number) {
            Rational c = sign * toks[pos].value;
            int num_col = toks[pos].column;
            ++pos;
            if (toks[pos].t == Token::type::star) ++pos;
            if (toks[pos].t == Token::type::ident) {
                coeffs[var_index(toks[pos])] += c;
                ++pos;
            } else {
                throw parse_error(parse_error::kind::non_homogeneous, line_no, num_col,
                                  "constant term in defining form (arrangement must be central)");
            }
        } else if (toks[pos].t == Token::type::ident) {
            coeffs[var_index(toks[pos])] += sign;
            ++pos;
        } else {
            throw parse_error(parse_error::kind::syntax, line_no, toks[pos].column, "expected a term");
        }
    }
    return coeffs;
}

}  // namespace detail

// Parse the .arr input format: '#' comment lines, a mandatory `vars:` header
// naming 3 or 4 variables, then one linear form per non-empty line.
inline Arrangement parse_arrangement(std::string_view text) {
    Arrangement arr;
    bool have_header = false;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        size_t ws = line.find_first_not_of(" \t\r");
        if (ws == std::string_view::npos) continue;
        if (line[ws] == '#') continue;
        std::string_view body = line.substr(ws);

        if (!have_header) {
            if (!body.starts_with("vars:"))
                throw parse_error(parse_error::kind::syntax, line_no, static_cast<int>(ws) + 1,
                                  "expected 'vars:' header before any form");
            auto toks = detail::tokenize_line(line.substr(ws + 5), line_no);
            for (const auto& tk : toks) {
                if (tk.t == detail::Token::type::end) break;
                if (tk.t != detail::Token::type::ident)
                    throw parse_error(parse_error::kind::syntax, line_no,
                                      tk.column + static_cast<int>(ws) + 5, "expected variable name");
                if (std::find(arr.var_names.begin(), arr.var_names.end(), tk.text) != arr.var_names.end())
                    throw parse_error(parse_error::kind::syntax, line_no,
                                      tk.column + static_cast<int>(ws) + 5,
                                      "duplicate variable name '" + tk.text + "'");
                arr.var_names.push_back(tk.text);
            }
            if (arr.var_names.size() != 3 && arr.var_names.size() != 4)
                throw parse_error(parse_error::kind::bad_variable_count, line_no,
                                  static_cast<int>(ws) + 1,
                                  "arrangements live in 3 or 4 variables, got " +
                                      std::to_string(arr.var_names.size()));
            arr.ambient_dim = static_cast<int>(arr.var_names.size());
            have_header = true;
            continue;
        }

        auto coeffs = detail::parse_form_line(body, line_no, arr.var_names);
        bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_zero(); });
        if (all_zero)
            throw parse_error(parse_error::kind::zero_form, line_no, static_cast<int>(ws) + 1,
                              "form is identically zero");
        LinearForm f = LinearForm::from_rationals(coeffs);
        if (std::find(arr.forms.begin(), arr.forms.end(), f) != arr.forms.end())
            throw parse_error(parse_error::kind::duplicate_hyperplane, line_no, static_cast<int>(ws) + 1,
                              "hyperplane proportional to an earlier form");
        arr.forms.push_back(std::move(f));
    }
    if (!have_header)
        throw parse_error(parse_error::kind::syntax, line_no, 1, "missing 'vars:' header");
    if (arr.forms.empty())
        throw parse_error(parse_error::kind::syntax, line_no, 1, "arrangement has no hyperplanes");
    return arr;
}

inline std::string print_arrangement(const Arrangement& a) {
    std::string s = "vars:";
    for (const auto& v : a.var_names) s += " " + v;
    s += "\n";
    for (const auto& f : a.forms) s += f.str(a.var_names) + "\n";
    return s;
}

namespace detail {

inline Arrangement pencil_arrangement(int k) {
    if (k < 2) throw unknown_example("pencil(k) requires k >= 2");
    std::string text = "vars: x y z\nx\ny\n";
    int count = 2;
    for (int j = 1; count < k; ++j) {
        text += "x+" + std::to_string(j) + "y\n";
        ++count;
        if (count < k) {
            text += "x-" + std::to_string(j) + "y\n";
            ++count;
        }
    }
    return parse_arrangement(text);
}

inline Arrangement generic4_arrangement(int n) {
    if (n < 1) throw unknown_example("generic4(d) requires d >= 1");
    if (n > 60) throw unknown_example("generic4(d) supported up to d = 60");
    std::string text = "vars: x y z w\n";
    for (Int i = 1; i <= n; ++i)
        text += "x+" + std::to_string(i) + "y+" + std::to_string(i * i) + "z+" +
                std::to_string(i * i * i) + "w\n";
    return parse_arrangement(text);
}

}  // namespace detail

// Built-in arrangements.  The named ones are classical line-arrangement
// examples; pencil(k) and generic4(d) are parameterized families.
inline Arrangement builtin(const std::string& name) {
    if (name == "A3")
        return parse_arrangement("vars: x y z\nx\ny\nz\nx-y\nx-z\ny-z\n");
    if (name == "B3")
        return parse_arrangement("vars: x y z\nx\ny\nz\nx-y\nx-z\ny-z\nx+y\nx+z\ny+z\n");
    if (name == "ex52")
        return parse_arrangement("vars: x y z\nx\ny\nz\nx-y\nx+y\nx-z\n");
    if (name == "pappus1")
        return parse_arrangement(
            "vars: x y z\nx\ny\nz\nx-y\ny-z\nx-y-z\n2x+y+z\n2x+y-z\n-2x+5y-z\n");
    if (name == "pappus2")
        return parse_arrangement(
            "vars: x y z\nx\ny\nz\nx+y\ny+z\nx+3z\nx+2y+z\nx+2y+3z\n2x+3y+3z\n");
    if (name == "boolean3") return parse_arrangement("vars: x y z\nx\ny\nz\n");
    if (name == "boolean4") return parse_arrangement("vars: x y z w\nx\ny\nz\nw\n");
    if (name.starts_with("pencil(") && name.ends_with(")")) {
        int k;
        try {
            k = std::stoi(name.substr(7, name.size() - 8));
        } catch (const std::exception&) {
            throw unknown_example("bad pencil parameter in '" + name + "'");
        }
        return detail::pencil_arrangement(k);
    }
    if (name.starts_with("generic4(") && name.ends_with(")")) {
        int d;
        try {
            d = std::stoi(name.substr(9, name.size() - 10));
        } catch (const std::exception&) {
            throw unknown_example("bad generic4 parameter in '" + name + "'");
        }
        return detail::generic4_arrangement(d);
    }
    throw unknown_example("unknown example '" + name + "'");
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "A3", "B3", "ex52", "pappus1", "pappus2", "boolean3", "boolean4", "pencil(k)", "generic4(d)"};
    return names;
}

}  // namespace arrbound
