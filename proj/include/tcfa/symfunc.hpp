#pragma once

#include <map>
#include <string>

#include "tcfa/partition.hpp"
#include "tcfa/rational.hpp"

namespace tcfa {

enum class Basis { PowerSum, Schur, Homogeneous };

/// A virtual symmetric function over Q: finitely supported rational
/// combination of basis elements indexed by partitions, tagged by the basis
/// it is expressed in. Arithmetic happens in the power-sum basis; Schur is
/// the output basis. Conversions round-trip exactly.
class SymFunc {
public:
    using Coeffs = std::map<Partition, Rat, PartitionLess>;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero() { return SymFunc{}; }
    static SymFunc one();               // p_{[]} = unit
    static SymFunc p(const Partition&); // power sum p_mu
    static SymFunc p(int r);
    static SymFunc h(int k);            // complete homogeneous
    static SymFunc e(int k);            // elementary
    static SymFunc s(const Partition&); // Schur

    Basis basis() const { return basis_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set(const Partition& mu, const Rat& coeff);
    Rat coeff(const Partition& mu) const;

    SymFunc to_basis(Basis target) const;
    SymFunc to_power() const { return to_basis(Basis::PowerSum); }
    SymFunc to_schur() const { return to_basis(Basis::Schur); }

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;  // product of symmetric functions
    SymFunc operator*(const Rat& scalar) const;
    SymFunc& operator+=(const SymFunc& o);
    bool operator==(const SymFunc& o) const;

    // Plethysm by the power sum p_r: p_mu -> p_{r*mu} (no signs; degree r-fold).
    SymFunc adams(int r) const;

    // Homogeneous degree if all terms have equal size, else -1; 0 for zero.
    int homogeneous_degree() const;

    // dim of the virtual S_k-representation with this Frobenius character
    // (k = homogeneous degree): k! * coefficient of p_{1^k}.
    Rat dimension() const;

    // Character value on the conjugacy class mu: z_mu * (p-coefficient at mu).
    Rat char_value(const Partition& mu) const;

    // True iff every Schur coefficient is a non-negative integer.
    bool effective() const;

    // Schur expansion like "s[2,1] + 2*s[1,1,1]"; "0" when zero.
    std::string to_string() const;

private:
    Basis basis_ = Basis::PowerSum;
    Coeffs coeffs_;
};

inline SymFunc operator*(const Rat& scalar, const SymFunc& f) { return f * scalar; }

// Frobenius character of an S_k-representation from its character values,
// one per conjugacy class (indexed like partitions_of(k)).
SymFunc frobenius_from_traces(int k, const std::vector<Rat>& traces);

// f tensored with the sign character (conjugate each Schur term).
SymFunc sign_twist(const SymFunc& f);

}  // namespace tcfa
