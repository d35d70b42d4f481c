#include "diffposet/rat.hpp"

namespace diffposet {

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    mpz_class num, den(1);
    if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
        throw std::invalid_argument("Rat::parse: bad numerator in '" + text + "'");
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
            throw std::invalid_argument("Rat::parse: bad denominator in '" + text + "'");
        if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + text + "'");
    }
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace diffposet
