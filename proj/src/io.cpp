#include "jkres/io.hpp"

#include <cmath>
#include <sstream>

#include "jkres/oracle.hpp"

namespace jkres::io {

namespace {

long require_integer(const ojson& j, const std::string& field) {
    if (!j.is_number_integer())
        throw validation_error(field, "expected an integer");
    return j.get<long>();
}

const ojson& require_member(const ojson& j, const std::string& key, const std::string& field) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(field, "missing required member '" + key + "'");
    return j.at(key);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, const std::string& field) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw validation_error(field, "invalid number '" + s + "'");
    }
}

std::complex<double> parse_complex(const std::string& raw, const std::string& field) {
    std::string s = raw;
    if (s.empty()) throw validation_error(field, "empty complex component");
    if (s.back() != 'i') return {parse_double(s, field), 0.0};
    s.pop_back();
    // Split at the last +/- that is not a leading sign or an exponent sign.
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos) {
        if (s.empty() || s == "+" || s == "-") s += "1";
        return {0.0, parse_double(s, field)};
    }
    std::string im = s.substr(cut);
    if (im == "+" || im == "-") im += "1";
    return {parse_double(s.substr(0, cut), field), parse_double(im, field)};
}

ojson complex_to_json(std::complex<double> v) {
    ojson j;
    j["re"] = v.real();
    j["im"] = v.imag();
    return j;
}

ojson basis_list_to_json(const std::vector<BasisSet>& bases) {
    ojson j = ojson::array();
    for (const auto& b : bases) j.push_back(b);
    return j;
}

ojson multiplicities_to_json(const std::map<int, int>& mult) {
    ojson j = ojson::array();
    for (const auto& [i, m] : mult) {
        ojson e;
        e["form"] = i;
        e["multiplicity"] = m;
        j.push_back(e);
    }
    return j;
}

ojson constant_term_to_json(const ConstantTerm& ct) {
    ojson j;
    j["polynomial"] = polynomial_to_json(ct.polynomial);
    j["degree_bound"] = ct.degree_bound;
    ojson witness = ojson::array();
    for (const auto& q : ct.alcove_witness) witness.push_back(q.str());
    j["alcove_witness"] = witness;
    j["base_window"] = {{"lo", ct.base_window.lo}, {"hi", ct.base_window.hi}};
    j["window_scale_used"] = ct.window_scale_used;
    return j;
}

ojson poly1_to_json(const Poly1& p) {
    ojson j = ojson::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

} // namespace

Rational parse_rational(const ojson& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw validation_error("rational", "expected an integer or a string 'a/b'");
}

Arrangement parse_arrangement(const ojson& j) {
    if (!j.is_object()) throw validation_error("arrangement", "expected a JSON object");
    long rank = require_integer(require_member(j, "rank", "arrangement"), "rank");
    const ojson& forms = require_member(j, "forms", "arrangement");
    if (!forms.is_array() || forms.empty())
        throw validation_error("forms", "expected a non-empty array of integer vectors");
    std::vector<LinearForm> list;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::string field = "forms[" + std::to_string(i) + "]";
        const ojson& row = forms.at(i);
        if (!row.is_array()) throw validation_error(field, "expected an array of integers");
        LinearForm lf;
        for (const auto& entry : row) lf.coords.push_back(require_integer(entry, field));
        list.push_back(std::move(lf));
    }
    return Arrangement(static_cast<int>(rank), std::move(list));
}

RationalFunction parse_function(const ojson& j, const Arrangement& arr) {
    if (!j.is_object()) throw validation_error("function", "expected a JSON object");
    RationalFunction f;
    const int r = arr.rank();
    if (j.contains("numerator")) {
        const ojson& num = j.at("numerator");
        if (!num.is_array()) throw validation_error("numerator", "expected an array of terms");
        Polynomial p(r);
        for (std::size_t i = 0; i < num.size(); ++i) {
            const std::string field = "numerator[" + std::to_string(i) + "]";
            const ojson& term = num.at(i);
            Rational c = parse_rational(require_member(term, "coefficient", field));
            const ojson& ex = require_member(term, "exponents", field);
            if (!ex.is_array() || static_cast<int>(ex.size()) != r)
                throw validation_error(field, "exponents must have one entry per variable");
            Polynomial::Exponents e;
            for (const auto& entry : ex) {
                long v = require_integer(entry, field);
                if (v < 0) throw validation_error(field, "exponents must be non-negative");
                e.push_back(static_cast<int>(v));
            }
            p.add_term(e, c);
        }
        f.numerator = std::move(p);
    } else {
        f.numerator = Polynomial::constant(r, Rational(1));
    }
    if (j.contains("denominator")) {
        const ojson& den = j.at("denominator");
        if (!den.is_array()) throw validation_error("denominator", "expected an array");
        for (std::size_t i = 0; i < den.size(); ++i) {
            const std::string field = "denominator[" + std::to_string(i) + "]";
            const ojson& entry = den.at(i);
            long idx = require_integer(require_member(entry, "form", field), field);
            long m = require_integer(require_member(entry, "multiplicity", field), field);
            if (f.denominator.count(static_cast<int>(idx)))
                throw validation_error(field, "duplicate form index " + std::to_string(idx));
            f.denominator[static_cast<int>(idx)] = static_cast<int>(m);
        }
    }
    validate_function(arr, f);
    return f;
}

std::vector<Rational> parse_rational_point(const std::string& s, int rank) {
    auto parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rank)
        throw validation_error("t", "expected " + std::to_string(rank) +
                                        " comma-separated rationals");
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(Rational::from_string(p));
    return out;
}

std::vector<std::complex<double>> parse_complex_point(const std::string& s, int rank) {
    auto parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rank)
        throw validation_error("point", "expected " + std::to_string(rank) +
                                            " comma-separated complex numbers");
    std::vector<std::complex<double>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_complex(p, "point"));
    return out;
}

ojson rational_to_json(const Rational& q) { return ojson(q.str()); }

ojson polynomial_to_json(const Polynomial& p) {
    ojson j = ojson::array();
    for (const auto& [e, c] : p.terms()) {
        ojson term;
        term["coefficient"] = c.str();
        term["exponents"] = e;
        j.push_back(term);
    }
    return j;
}

ojson run_job(const JobSpec& spec) {
    auto need_arrangement = [&]() {
        if (!spec.arrangement)
            throw validation_error("arrangement", "an arrangement is required");
        return parse_arrangement(*spec.arrangement);
    };
    auto need_function = [&](const Arrangement& arr) {
        if (!spec.function) throw validation_error("function", "a function is required");
        return parse_function(*spec.function, arr);
    };
    auto need_t = [&](const Arrangement& arr) {
        if (!spec.t) throw validation_error("t", "a rational point t is required");
        return parse_rational_point(*spec.t, arr.rank());
    };
    if (spec.window_scale < 1)
        throw validation_error("window-scale", "window scale must be >= 1");

    ojson result;
    if (spec.command == "bases") {
        Arrangement arr = need_arrangement();
        result["rank"] = arr.rank();
        result["size"] = arr.size();
        result["bases"] = basis_list_to_json(enumerate_bases(arr));
        result["nbc_bases"] = basis_list_to_json(nbc_bases(arr));
        ojson walls = ojson::array();
        for (const auto& w : arr.wall_normals()) walls.push_back(w);
        result["wall_normals"] = walls;
    } else if (spec.command == "diagonal-basis") {
        Arrangement arr = need_arrangement();
        DiagonalBasis basis = diagonal_basis(arr);
        result["members"] = basis_list_to_json(basis.members);
        result["verified"] = true;
    } else if (spec.command == "jk-residue") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        DiagonalBasis basis = diagonal_basis(arr);
        SimpleElement el = jk_residue(arr, f, basis, spec.window_scale);
        ojson terms = ojson::array();
        for (const auto& [sigma, c] : el) {
            ojson term;
            term["basis"] = sigma;
            term["coefficient"] = rational_to_json(c);
            terms.push_back(term);
        }
        result["element"] = terms;
        result["window_scale"] = spec.window_scale;
    } else if (spec.command == "decompose") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        if (!(f.numerator.is_constant() &&
              f.numerator.constant_coefficient() == Rational(1)))
            throw validation_error("numerator", "decompose expects the constant numerator 1");
        auto terms = decompose_to_basis_fractions(arr, f.denominator);
        ojson list = ojson::array();
        for (const auto& term : terms) {
            ojson e;
            e["coefficient"] = rational_to_json(term.coefficient);
            e["denominator"] = multiplicities_to_json(term.multiplicities);
            list.push_back(e);
        }
        result["terms"] = list;
    } else if (spec.command == "ct") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        auto t = need_t(arr);
        ConstantTerm ct = constant_term(arr, f, t, spec.window_scale);
        result = constant_term_to_json(ct);
        result["value_at_t"] = rational_to_json(ct.polynomial.eval(t));
    } else if (spec.command == "zsum") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        if (!(f.numerator.is_constant() &&
              f.numerator.constant_coefficient() == Rational(1)))
            throw validation_error("numerator", "zsum expects the constant numerator 1");
        std::optional<std::vector<Rational>> t;
        if (spec.t) t = parse_rational_point(*spec.t, arr.rank());
        NormalizedSumResult sum =
            normalized_sum(arr, f.denominator, t, spec.limit_zero, spec.window_scale);
        result["two_i_pi_exponent"] = sum.value.two_i_pi_exponent;
        result["coefficient"] = rational_to_json(sum.value.coefficient);
        if (auto real = two_pi_real_coefficient(sum.value))
            result["real_two_pi_coefficient"] = rational_to_json(*real);
        result["limit_zero"] = sum.limit_zero;
        result["constant_term"] = constant_term_to_json(sum.ct);
    } else if (spec.command == "oracle") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        auto t = need_t(arr);
        std::vector<std::complex<double>> z(arr.rank(), std::complex<double>{});
        if (spec.z) z = parse_complex_point(*spec.z, arr.rank());
        TruncatedSum sum = lattice_sum(arr, f, t, z, spec.radius);
        result["value"] = complex_to_json(sum.value);
        result["radius"] = sum.radius;
        result["tail_bound"] = sum.tail_bound;
    } else if (spec.command == "e1d") {
        if (!spec.t) throw validation_error("t", "a rational t is required");
        Rational t = Rational::from_string(*spec.t);
        OneDKernel kernel = one_d_eisenstein(spec.k, t);
        result["k"] = kernel.k;
        result["floor"] = kernel.floor_t.get_str();
        ojson coeffs = ojson::array();
        for (const auto& c : kernel.t_coeffs) {
            ojson e;
            e["num"] = poly1_to_json(c.num());
            e["den"] = poly1_to_json(c.den());
            coeffs.push_back(e);
        }
        result["t_coefficients"] = coeffs;
        if (spec.z) {
            auto z = parse_complex_point(*spec.z, 1);
            result["value"] = complex_to_json(kernel.eval(t, z[0]));
        }
    } else if (spec.command == "kernel-eval") {
        Arrangement arr = need_arrangement();
        RationalFunction f = need_function(arr);
        auto t = need_t(arr);
        if (!spec.y) throw validation_error("y", "a complex point y is required");
        auto y = parse_complex_point(*spec.y, arr.rank());
        result["value"] = complex_to_json(kernel_eval(arr, f, t, y, spec.window_scale));
    } else {
        throw validation_error("command", "unknown command '" + spec.command + "'");
    }

    ojson envelope;
    envelope["command"] = spec.command;
    envelope["result"] = result;
    return envelope;
}

int run_cli_job(const JobSpec& spec, std::ostream& out) {
    auto emit_error = [&](const std::string& type, const std::string& message,
                          const std::string& field, int code) {
        ojson j;
        j["error"]["type"] = type;
        j["error"]["message"] = message;
        if (!field.empty()) j["error"]["field"] = field;
        out << j.dump(2) << "\n";
        return code;
    };
    try {
        out << run_job(spec).dump(2) << "\n";
        return 0;
    } catch (const validation_error& e) {
        return emit_error("validation", e.what(), e.field(), 2);
    } catch (const precondition_error& e) {
        return emit_error("precondition", e.what(), "", 3);
    } catch (const stability_error& e) {
        return emit_error("stability", e.what(), "", 4);
    } catch (const window_overflow& e) {
        return emit_error("window", e.what(), "", 4);
    } catch (const verification_error& e) {
        return emit_error("internal", e.what(), "", 4);
    }
}

} // namespace jkres::io
