#include "thetalab/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace thetalab {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer in rational");
        std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (pos == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
        for (std::size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed integer: " + std::string(s));
        // mpz_class rejects a leading '+'
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

namespace {

Rational pow10(long e) {
    BigInt p = pow_int(BigInt(10), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

std::string strip_fraction_zeros(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

std::string to_decimal(const Rational& value, int significant) {
    if (significant < 1) throw std::invalid_argument("precision must be at least 1");
    if (value == 0) return "0";
    Rational a = abs(value);

    long e = static_cast<long>(std::floor(log_of(a) / std::numbers::ln10));
    while (a < pow10(e)) --e;
    while (a >= pow10(e + 1)) ++e;

    Rational scaled = a * pow10(significant - 1 - e) + Rational(1, 2);
    BigInt m = scaled.get_num() / scaled.get_den();
    if (m == pow_int(BigInt(10), significant)) {
        m /= 10;
        ++e;
    }
    std::string digits = m.get_str();

    std::string out = value < 0 ? "-" : "";
    if (e < -5 || e >= significant) {
        std::string mant = digits.substr(0, 1);
        if (digits.size() > 1) mant += "." + digits.substr(1);
        std::ostringstream exp;
        exp << (e < 0 ? "-" : "+") << (std::abs(e) < 10 ? "0" : "") << std::abs(e);
        return out + strip_fraction_zeros(mant) + "e" + exp.str();
    }
    if (e >= 0) {
        std::string s = digits.substr(0, e + 1);
        if (static_cast<long>(digits.size()) > e + 1) s += "." + digits.substr(e + 1);
        return out + strip_fraction_zeros(s);
    }
    return out + strip_fraction_zeros("0." + std::string(-e - 1, '0') + digits);
}

double log_of(const Rational& value) {
    if (value <= 0) throw std::domain_error("log of non-positive rational");
    auto log_int = [](const BigInt& x) {
        long exp = 0;
        double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
        return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
    };
    return log_int(value.get_num()) - log_int(value.get_den());
}

BigInt binom(long n, long r) {
    if (n < 0) throw std::invalid_argument("binom: negative n = " + std::to_string(n));
    if (r < 0 || r > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt pow_int(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

LSpec LSpec::make(long n, int k, std::vector<int> L) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (n <= k) throw std::invalid_argument("n must exceed k (n=" + std::to_string(n) +
                                            ", k=" + std::to_string(k) + ")");
    std::sort(L.begin(), L.end());
    L.erase(std::unique(L.begin(), L.end()), L.end());
    for (int l : L)
        if (l < 0 || l > k - 1)
            throw std::invalid_argument("intersection size " + std::to_string(l) +
                                        " outside [0, k-1]");
    return LSpec(n, k, std::move(L));
}

BigInt RunDecomposition::factorial_product() const {
    BigInt out = 1;
    for (const Run& r : runs) out *= factorial(r.length);
    return out;
}

RunDecomposition full_runs(std::span<const int> L) {
    RunDecomposition out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i > 0 && L[i] <= L[i - 1]) throw std::invalid_argument("L must be strictly increasing");
        if (i > 0 && L[i] == L[i - 1] + 1)
            ++out.runs.back().length;
        else
            out.runs.push_back({L[i], 1});
    }
    return out;
}

std::vector<int> complement_set(int k, std::span<const int> L) {
    std::vector<int> out;
    for (int v = 0; v < k; ++v)
        if (std::find(L.begin(), L.end(), v) == L.end()) out.push_back(v);
    return out;
}

LSpec complement_L(const LSpec& spec) {
    return LSpec::make(spec.n(), spec.k(), complement_set(spec.k(), spec.L()));
}

std::string join_list(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace thetalab
