#include "tcfa/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcfa {

SymFunc SymFunc::one() {
    SymFunc f;
    f.coeffs_[Partition{}] = 1;
    return f;
}

SymFunc SymFunc::p(const Partition& mu) {
    SymFunc f;
    f.coeffs_[mu] = 1;
    return f;
}

SymFunc SymFunc::p(int r) { return p(Partition{r}); }

// h_k = sum_{mu |- k} p_mu / z_mu
SymFunc SymFunc::h(int k) {
    SymFunc f;
    for (const auto& mu : partitions_of(k)) f.coeffs_[mu] = Rat(1) / Rat(z_order(mu));
    return f;
}

// e_k = sum_{mu |- k} (-1)^{k - l(mu)} p_mu / z_mu
SymFunc SymFunc::e(int k) {
    SymFunc f;
    for (const auto& mu : partitions_of(k)) {
        Rat c = Rat(1) / Rat(z_order(mu));
        if ((k - mu.length()) % 2 != 0) c = -c;
        f.coeffs_[mu] = c;
    }
    return f;
}

// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu
SymFunc SymFunc::s(const Partition& lambda) {
    SymFunc f;
    int k = lambda.size();
    for (const auto& mu : partitions_of(k)) {
        long long chi = sym_character(lambda, mu);
        if (chi != 0) f.coeffs_[mu] = Rat(static_cast<long>(chi)) / Rat(z_order(mu));
    }
    return f;
}

void SymFunc::set(const Partition& mu, const Rat& coeff) {
    if (coeff == 0)
        coeffs_.erase(mu);
    else
        coeffs_[mu] = coeff;
}

Rat SymFunc::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

SymFunc SymFunc::to_basis(Basis target) const {
    if (target == basis_) return *this;
    // go through the power-sum basis
    SymFunc pform;
    switch (basis_) {
        case Basis::PowerSum:
            pform = *this;
            break;
        case Basis::Schur:
            for (const auto& [lam, c] : coeffs_) pform += SymFunc::s(lam) * c;
            break;
        case Basis::Homogeneous:
            for (const auto& [lam, c] : coeffs_) {
                SymFunc term = SymFunc::one();
                for (int part : lam.parts) term = term * SymFunc::h(part);
                pform += term * c;
            }
            break;
    }
    if (target == Basis::PowerSum) return pform;
    if (target == Basis::Schur) {
        // p_mu = sum_lambda chi^lambda(mu) s_lambda, per homogeneous degree
        SymFunc out(Basis::Schur);
        std::map<int, Coeffs> by_degree;
        for (const auto& [mu, c] : pform.coeffs_) by_degree[mu.size()][mu] = c;
        for (const auto& [k, terms] : by_degree) {
            for (const auto& lam : partitions_of(k)) {
                Rat acc = 0;
                for (const auto& [mu, c] : terms) acc += Rat(static_cast<long>(sym_character(lam, mu))) * c;
                if (acc != 0) out.coeffs_[lam] = acc;
            }
        }
        return out;
    }
    throw std::invalid_argument("conversion to the homogeneous basis is not supported");
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_) {
        *this = to_power();
        return *this += o.to_power();
    }
    for (const auto& [mu, c] : o.coeffs_) {
        auto it = coeffs_.find(mu);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[mu] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + o * Rat(-1); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc a = to_power(), b = o.to_power();
    SymFunc r;
    for (const auto& [mu, cm] : a.coeffs_) {
        for (const auto& [nu, cn] : b.coeffs_) {
            std::vector<int> parts = mu.parts;
            parts.insert(parts.end(), nu.parts.begin(), nu.parts.end());
            std::sort(parts.rbegin(), parts.rend());
            Partition prod(std::move(parts));
            Rat c = cm * cn;
            auto it = r.coeffs_.find(prod);
            if (it == r.coeffs_.end()) {
                if (c != 0) r.coeffs_[prod] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    }
    return r;
}

SymFunc SymFunc::operator*(const Rat& scalar) const {
    SymFunc r(basis_);
    if (scalar == 0) return r;
    for (const auto& [mu, c] : coeffs_) r.coeffs_[mu] = c * scalar;
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis_ == o.basis_) return coeffs_ == o.coeffs_;
    return to_power().coeffs_ == o.to_power().coeffs_;
}

SymFunc SymFunc::adams(int r) const {
    if (r < 1) throw std::invalid_argument("adams: r must be >= 1");
    SymFunc a = to_power();
    SymFunc out;
    for (const auto& [mu, c] : a.coeffs_) out.coeffs_[stretch(mu, r)] = c;
    return out;
}

int SymFunc::homogeneous_degree() const {
    SymFunc a = to_power();
    int deg = 0;
    bool first = true;
    for (const auto& [mu, c] : a.coeffs_) {
        (void)c;
        if (first) {
            deg = mu.size();
            first = false;
        } else if (mu.size() != deg) {
            return -1;
        }
    }
    return deg;
}

Rat SymFunc::dimension() const {
    SymFunc a = to_power();
    Rat total = 0;
    std::map<int, Rat> ones_coeff;
    for (const auto& [mu, c] : a.coeffs_)
        if (mu.length() == mu.size()) ones_coeff[mu.size()] += c;
    for (const auto& [k, c] : ones_coeff) {
        Rat fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        total += c * fact;
    }
    return total;
}

Rat SymFunc::char_value(const Partition& mu) const {
    SymFunc a = to_power();
    return a.coeff(mu) * Rat(z_order(mu));
}

bool SymFunc::effective() const {
    SymFunc sch = to_schur();
    for (const auto& [lam, c] : sch.coeffs()) {
        (void)lam;
        if (!is_integer(c) || c < 0) return false;
    }
    return true;
}

std::string SymFunc::to_string() const {
    SymFunc sch = to_schur();
    if (sch.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lam, c] : sch.coeffs()) {
        Rat cc = c;
        if (first) {
            if (cc < 0) out << "-";
        } else {
            out << (cc < 0 ? " - " : " + ");
        }
        if (cc < 0) cc = -cc;
        if (cc != 1) out << rat_to_string(cc) << "*";
        out << "s" << lam.to_string();
        first = false;
    }
    return out.str();
}

SymFunc frobenius_from_traces(int k, const std::vector<Rat>& traces) {
    const auto& mus = partitions_of(k);
    if (traces.size() != mus.size())
        throw std::invalid_argument("frobenius_from_traces: one trace per conjugacy class");
    SymFunc f;
    for (size_t i = 0; i < mus.size(); ++i)
        if (traces[i] != 0) f.set(mus[i], traces[i] / Rat(z_order(mus[i])));
    return f;
}

SymFunc sign_twist(const SymFunc& f) {
    SymFunc sch = f.to_schur();
    SymFunc out(Basis::Schur);
    for (const auto& [lam, c] : sch.coeffs()) out.set(conjugate(lam), c);
    return out.to_power();
}

}  // namespace tcfa
