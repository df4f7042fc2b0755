//! Generalized minors evaluated on the factorized chart, the initial
//! cluster variables, and the type-C factorization maps φ/ψ.
//!
//! The chart element is
//! `g = a · x_{c_1}(u_1) α_{c_1}^∨(u_1) ⋯ x_{c_{2r}}(u_{2r}) α_{c_{2r}}^∨(u_{2r})`
//! with letters `(c_1,…,c_{2r}) = (r,…,1,r,…,1)` and parameters
//! `(u_1,…,u_{2r}) = (Y_{1,r},…,Y_{1,1},Y_{2,r},…,Y_{2,1})`.  The minor
//! `Δ_{Λ_j, wΛ_j}(g)` is computed as `⟨ w̄ u_{Λ_j}, ω(g) u_{Λ_j} ⟩` with `ω`
//! the transpose involution (which swaps `x_i` and `y_i` and fixes the
//! torus), so the transport applies `y_{c_m}(u_m) α_{c_m}^∨(u_m)` in order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};

use crate::laurent::{LaurentPoly, Monomial, TorusWeight, VarRef};
use crate::rep::{FundRep, RepElement};
use crate::rootdata::{CartanData, Kind};

/// The chart parameters in evaluation order: pairs `(c_m, u_m)` with colors
/// `(r,…,1,r,…,1)` and parameters `(Y_{1,r},…,Y_{1,1},Y_{2,r},…,Y_{2,1})`.
pub fn yset(cd: &CartanData) -> Vec<(usize, Monomial)> {
    let r = cd.rank;
    let mut out = Vec::with_capacity(2 * r);
    for s in 1..=2 {
        for i in (1..=r).rev() {
            out.push((i, Monomial::var(r, s, i as u32)));
        }
    }
    out
}

/// Applies the `ω(g)`-transport (without the torus factor `a`) to an
/// arbitrary representation element.
pub fn omega_transport(cd: &CartanData, elem: &RepElement) -> RepElement {
    let mut v = elem.clone();
    for (c, u) in yset(cd) {
        v = v.apply_y(c, &LaurentPoly::from_monomial(u.clone()));
        v = v.apply_alpha_coroot(c, &u);
    }
    v
}

/// Errors from minor evaluation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinorError {
    /// The pairing vanished identically.
    ZeroMinor,
    /// The pairing had terms of both signs, so no constant sign exists.
    MixedSigns,
}

impl core::fmt::Display for MinorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MinorError::ZeroMinor => f.write_str("minor vanished identically"),
            MinorError::MixedSigns => f.write_str("minor has coefficients of both signs"),
        }
    }
}

/// A sign-normalized minor value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorValue {
    /// The minor with positive coefficients.
    pub poly: LaurentPoly,
    /// Whether the raw pairing was negated to reach positive coefficients.
    pub negated: bool,
}

/// Evaluates the generalized minor `Δ_{Λ_j, wΛ_j}` on the chart element,
/// with `w` a Weyl word (leftmost factor applied last to `u_{Λ_j}`).
pub fn evaluate_minor(cd: &CartanData, fund: usize, w: &[u32]) -> Result<MinorValue, MinorError> {
    let rep = FundRep::new(cd, fund);
    let mut wbar = rep.highest();
    for &i in w.iter().rev() {
        wbar = wbar.apply_sbar(i as usize);
    }
    let g = omega_transport(cd, &rep.highest().apply_torus_a());
    let raw = wbar.pairing(&g);
    if raw.is_zero() {
        return Err(MinorError::ZeroMinor);
    }
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (_, c) in raw.terms() {
        match c.sign() {
            Sign::Minus => neg += 1,
            _ => pos += 1,
        }
    }
    if pos > 0 && neg > 0 {
        return Err(MinorError::MixedSigns);
    }
    if neg > 0 {
        Ok(MinorValue { poly: raw.neg(), negated: true })
    } else {
        Ok(MinorValue { poly: raw, negated: false })
    }
}

/// The Weyl word attached to an initial-seed vertex
/// `k ∈ [−r,−1] ∪ [1,2r]`, together with its fundamental index:
///
/// * `k ∈ [1, r]` (frozen): `Δ_{Λ_k, Λ_k}`, empty word;
/// * `k = r + t` (mutable): `Δ_{Λ_t, s_1⋯s_t Λ_t}`;
/// * `k = −t` (frozen): `Δ_{Λ_t, c^{−2} Λ_t}` with
///   `c^{−2} = s_1⋯s_r s_1⋯s_r`.
pub fn initial_vertex_minor(cd: &CartanData, vertex: i64) -> (usize, Vec<u32>) {
    let r = cd.rank as i64;
    if vertex >= 1 && vertex <= r {
        (vertex as usize, Vec::new())
    } else if vertex > r && vertex <= 2 * r {
        let t = (vertex - r) as usize;
        ((t), (1..=t as u32).collect())
    } else if vertex >= -r && vertex <= -1 {
        let t = (-vertex) as usize;
        let mut w: Vec<u32> = (1..=r as u32).collect();
        w.extend(1..=r as u32);
        (t, w)
    } else {
        panic!("vertex {vertex} outside [−r,−1] ∪ [1,2r]");
    }
}

/// The initial cluster (or frozen) variable at an engine vertex.
pub fn initial_cluster_variable(cd: &CartanData, vertex: i64) -> LaurentPoly {
    let (fund, w) = initial_vertex_minor(cd, vertex);
    evaluate_minor(cd, fund, &w)
        .unwrap_or_else(|e| panic!("initial minor at vertex {vertex} failed: {e}"))
        .poly
}

// --- Type-C factorization maps φ and ψ -------------------------------------

fn yv(rank: usize, s: i32, i: i64) -> Monomial {
    if i < 1 || i as usize > rank {
        Monomial::one(rank)
    } else {
        Monomial::var(rank, s, i as u32)
    }
}

/// The φ-parameters `Φ_{j,l}` of the type-C factorization, keyed by
/// `(row j, color l)`.
pub fn phi_values(cd: &CartanData) -> BTreeMap<(i32, u32), Monomial> {
    assert_eq!(cd.kind, Kind::C, "factorization maps are implemented for type C");
    let r = cd.rank as i64;
    let rank = cd.rank;
    let mut out = BTreeMap::new();
    for l in 1..=r {
        let phi2 = if l < r {
            yv(rank, 2, l - 1).mul(&yv(rank, 2, l).inv())
        } else {
            yv(rank, 2, r - 1).pow(2).mul(&yv(rank, 2, r).inv())
        };
        let phi1 = if l < r {
            yv(rank, 1, l - 1)
                .mul(&yv(rank, 2, l - 1))
                .mul(&yv(rank, 2, l + 1))
                .mul(&yv(rank, 1, l).inv())
                .mul(&yv(rank, 2, l).pow(-2))
        } else {
            yv(rank, 1, r - 1)
                .pow(2)
                .mul(&yv(rank, 2, r - 1).pow(2))
                .mul(&yv(rank, 1, r).inv())
                .mul(&yv(rank, 2, r).pow(-2))
        };
        out.insert((1, l as u32), phi1);
        out.insert((2, l as u32), phi2);
    }
    out
}

/// The ψ-parameters `Ψ_{j,l}` of the type-C factorization, keyed by
/// `(row j, color l)`.
pub fn psi_values(cd: &CartanData) -> BTreeMap<(i32, u32), Monomial> {
    assert_eq!(cd.kind, Kind::C, "factorization maps are implemented for type C");
    let r = cd.rank as i64;
    let rank = cd.rank;
    let mut psi2: BTreeMap<i64, Monomial> = BTreeMap::new();
    psi2.insert(0, Monomial::one(rank));
    for l in 1..=r {
        let m = if l < r {
            (1..=l).fold(Monomial::one(rank), |acc, t| acc.mul(&yv(rank, 2, t).inv()))
        } else {
            (1..r)
                .fold(Monomial::one(rank), |acc, t| acc.mul(&yv(rank, 2, t).pow(-2)))
                .mul(&yv(rank, 2, r).inv())
        };
        psi2.insert(l, m);
    }
    let mut psi1: BTreeMap<i64, Monomial> = BTreeMap::new();
    psi1.insert(0, Monomial::one(rank));
    for l in 1..=r {
        let m = if l < r {
            psi1[&(l - 1)]
                .mul(&psi2[&(l - 1)])
                .mul(&psi2[&(l + 1)])
                .mul(&psi2[&l].pow(-2))
                .mul(&yv(rank, 1, l).inv())
        } else {
            psi1[&(r - 1)]
                .pow(2)
                .mul(&psi2[&(r - 1)].pow(2))
                .mul(&psi2[&r].pow(-2))
                .mul(&yv(rank, 1, r).inv())
        };
        psi1.insert(l, m);
    }
    let mut out = BTreeMap::new();
    for l in 1..=r {
        out.insert((1, l as u32), psi1[&l].clone());
        out.insert((2, l as u32), psi2[&l].clone());
    }
    out
}

/// Substitutes monomials for the variables of `m` (positionally by
/// `(row, color)`); variables absent from the table are kept.
pub fn substitute_monomial(
    rank: usize,
    m: &Monomial,
    table: &BTreeMap<(i32, u32), Monomial>,
) -> Monomial {
    let mut out = Monomial::a_pow(m.aweight().clone());
    for (v, &e) in m.exps() {
        match table.get(&(v.row, v.color)) {
            Some(val) => out = out.mul(&val.pow(e)),
            None => out = out.mul(&Monomial::from_exps(rank, &[(v.row, v.color, e)])),
        }
    }
    out
}

/// Checks symbolically that `ψ ∘ φ = id` for type C: substituting the
/// `Φ`-parameters into every `Ψ_{j,l}` returns `Y_{j,l}`, and the torus
/// parts recombine as `Ψ_{1,i}(Φ) Ψ_{2,i}(Φ) = Y_{1,i} Y_{2,i}` — which is
/// exactly the first family of identities again, so the unipotent and torus
/// parts close simultaneously.
pub fn factorization_roundtrip(cd: &CartanData) -> bool {
    let phi = phi_values(cd);
    let psi = psi_values(cd);
    for ((j, l), p) in &psi {
        let got = substitute_monomial(cd.rank, p, &phi);
        if got != Monomial::var(cd.rank, *j, *l) {
            return false;
        }
    }
    for i in 1..=cd.rank as u32 {
        let h = substitute_monomial(cd.rank, &psi[&(1, i)], &phi)
            .mul(&substitute_monomial(cd.rank, &psi[&(2, i)], &phi));
        let want = Monomial::var(cd.rank, 1, i).mul(&Monomial::var(cd.rank, 2, i));
        if h != want {
            return false;
        }
    }
    true
}

/// Evaluates a pure-`Y` monomial at an integer point as an exact rational
/// `(numerator, denominator)`; the assignment must cover the support and be
/// nonzero.
pub fn eval_monomial_rational(
    m: &Monomial,
    point: &BTreeMap<VarRef, i64>,
) -> (BigInt, BigInt) {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (v, &e) in m.exps() {
        let base = BigInt::from(*point.get(v).expect("assignment must cover the support"));
        assert!(base.sign() != Sign::NoSign, "assignment must be nonzero");
        let p = num_traits::pow::pow(base, e.unsigned_abs() as usize);
        if e > 0 {
            num *= p;
        } else {
            den *= p;
        }
    }
    (num, den)
}

/// Checks the commutation relation
/// `α_i^∨(s) x_j(t) = x_j(s^{a_{i,j}} t) α_i^∨(s)` as an operator identity
/// on the whole vector representation, with symbolic `s`, `t`.
pub fn commutation_check(cd: &CartanData) -> bool {
    use crate::rep::{vector_letters, BasisVec};
    let rank = cd.rank;
    let s = Monomial::var(rank, -101, 1);
    let t = LaurentPoly::var(rank, -102, 1);
    for l in vector_letters(cd.kind, rank) {
        let v = RepElement::from_basis(cd.kind, rank, BasisVec::Wedge(alloc::vec![l]));
        for i in 1..=rank {
            for j in 1..=rank {
                let lhs = v.apply_x(j, &t).apply_alpha_coroot(i, &s);
                let rhs = v
                    .apply_alpha_coroot(i, &s)
                    .apply_x(j, &t.mul_monomial(&s.pow(cd.a(i, j))));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Convenience: `a^{Λ_k}` as a Laurent polynomial.
pub fn a_fundamental(rank: usize, k: usize) -> LaurentPoly {
    LaurentPoly::from_monomial(Monomial::a_pow(TorusWeight::fundamental(rank, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{BasisVec, Letter};
    use alloc::vec;

    /// Builds `a^w · Σ coeff · Y-monomial` from explicit data.
    /// `(row, color, exponent)` triples of a monomial.
    type Exps = [(i32, u32, i64)];

    fn poly(
        rank: usize,
        weight: &[(usize, i64)],
        terms: &[(i64, &Exps)],
    ) -> LaurentPoly {
        let mut w = TorusWeight::zero(rank);
        for &(k, c) in weight {
            w = w.add(&TorusWeight::fundamental(rank, k).scale(c));
        }
        let aw = Monomial::a_pow(w);
        let mut out = LaurentPoly::zero(rank);
        for &(c, triples) in terms {
            let m = Monomial::from_exps(rank, triples).mul(&aw);
            out = out.add(&LaurentPoly::from_term(m, BigInt::from(c)));
        }
        out
    }

    /// [PAPER] the `ω(g)`-transport of `v_1` and `v_2` in the C₂ vector
    /// representation (without the torus factor).
    #[test]
    fn c2_omega_transport_columns() {
        let cd = CartanData::new(Kind::C, 2);
        let v1 = RepElement::from_basis(Kind::C, 2, BasisVec::Wedge(vec![Letter::Pos(1)]));
        let g1 = omega_transport(&cd, &v1);
        assert_eq!(
            g1.coefficient(&BasisVec::Wedge(vec![Letter::Pos(1)])),
            poly(2, &[], &[(1, &[(1, 1, 1), (2, 1, 1)])])
        );
        assert_eq!(
            g1.coefficient(&BasisVec::Wedge(vec![Letter::Pos(2)])),
            poly(2, &[], &[(1, &[(1, 1, 1)]), (1, &[(2, 2, 1), (2, 1, -1)])])
        );
        assert_eq!(
            g1.coefficient(&BasisVec::Wedge(vec![Letter::Neg(2)])),
            poly(2, &[], &[(1, &[(2, 1, 1)])])
        );
        assert_eq!(
            g1.coefficient(&BasisVec::Wedge(vec![Letter::Neg(1)])),
            LaurentPoly::one(2)
        );
        let v2 = RepElement::from_basis(Kind::C, 2, BasisVec::Wedge(vec![Letter::Pos(2)]));
        let g2 = omega_transport(&cd, &v2);
        assert_eq!(
            g2.coefficient(&BasisVec::Wedge(vec![Letter::Pos(1)])),
            LaurentPoly::zero(2)
        );
        assert_eq!(
            g2.coefficient(&BasisVec::Wedge(vec![Letter::Pos(2)])),
            poly(2, &[], &[(1, &[(1, 2, 1), (2, 2, 1), (1, 1, -1), (2, 1, -1)])])
        );
        assert_eq!(
            g2.coefficient(&BasisVec::Wedge(vec![Letter::Neg(2)])),
            poly(
                2,
                &[],
                &[
                    (1, &[(1, 1, 1), (2, 1, 1), (2, 2, -1)]),
                    (1, &[(1, 2, 1), (2, 1, 1), (1, 1, -1)])
                ]
            )
        );
        assert_eq!(
            g2.coefficient(&BasisVec::Wedge(vec![Letter::Neg(1)])),
            poly(
                2,
                &[],
                &[
                    (1, &[(2, 1, -1)]),
                    (1, &[(1, 1, 1), (2, 2, -1)]),
                    (1, &[(1, 2, 1), (1, 1, -1)])
                ]
            )
        );
    }

    /// [PAPER] the four C₂ initial minors.
    #[test]
    fn c2_initial_minors() {
        let cd = CartanData::new(Kind::C, 2);
        // Δ_{Λ1,Λ1} = a^{Λ1} Y_{1,1} Y_{2,1}.
        let m = evaluate_minor(&cd, 1, &[]).unwrap();
        assert!(!m.negated);
        assert_eq!(m.poly, poly(2, &[(1, 1)], &[(1, &[(1, 1, 1), (2, 1, 1)])]));
        // Δ_{Λ1,s_1Λ1} = a^{Λ1}(Y_{1,1} + Y_{2,2}/Y_{2,1}).
        let m = evaluate_minor(&cd, 1, &[1]).unwrap();
        assert_eq!(
            m.poly,
            poly(2, &[(1, 1)], &[(1, &[(1, 1, 1)]), (1, &[(2, 2, 1), (2, 1, -1)])])
        );
        assert_eq!(
            alloc::format!("{}", m.poly),
            "a^{L1}*(Y[1,1] + Y[2,2]*Y[2,1]^-1)"
        );
        // Δ_{Λ2,s_1s_2Λ2} = a^{Λ2}(Y_{1,2} + Y²_{1,1}/Y_{2,2} + 2Y_{1,1}/Y_{2,1}
        //                           + Y_{2,2}/Y²_{2,1}).
        let m = evaluate_minor(&cd, 2, &[1, 2]).unwrap();
        assert_eq!(
            m.poly,
            poly(
                2,
                &[(2, 1)],
                &[
                    (1, &[(1, 2, 1)]),
                    (1, &[(1, 1, 2), (2, 2, -1)]),
                    (2, &[(1, 1, 1), (2, 1, -1)]),
                    (1, &[(2, 2, 1), (2, 1, -2)])
                ]
            )
        );
        // Δ_{Λ2,Λ2} = a^{Λ2} Y_{1,2} Y_{2,2}.
        let m = evaluate_minor(&cd, 2, &[]).unwrap();
        assert_eq!(m.poly, poly(2, &[(2, 1)], &[(1, &[(1, 2, 1), (2, 2, 1)])]));
    }

    /// [PAPER] B₂ initial mutable variables match the two closed forms.
    #[test]
    fn b2_initial_mutable_minors() {
        let cd = CartanData::new(Kind::B, 2);
        let x3 = initial_cluster_variable(&cd, 3);
        assert_eq!(
            x3,
            poly(2, &[(1, 1)], &[(1, &[(1, 1, 1)]), (1, &[(2, 2, 2), (2, 1, -1)])])
        );
        let x4 = initial_cluster_variable(&cd, 4);
        assert_eq!(
            x4,
            poly(
                2,
                &[(2, 1)],
                &[
                    (1, &[(1, 2, 1)]),
                    (1, &[(1, 1, 1), (2, 2, -1)]),
                    (1, &[(2, 2, 1), (2, 1, -1)])
                ]
            )
        );
    }

    /// [DERIVED] frozen variables: `x_k = a^{Λ_k} Y_{1,k} Y_{2,k}` and
    /// `x_{−k} = a^{Λ_k}` across types and ranks.
    #[test]
    fn frozen_variables() {
        for (kind, rank) in [(Kind::B, 2), (Kind::C, 2), (Kind::B, 3), (Kind::C, 3), (Kind::D, 3)]
        {
            let cd = CartanData::new(kind, rank);
            for k in 1..=rank {
                let xk = initial_cluster_variable(&cd, k as i64);
                assert_eq!(
                    xk,
                    poly(rank, &[(k, 1)], &[(1, &[(1, k as u32, 1), (2, k as u32, 1)])]),
                    "{kind}{rank} vertex {k}"
                );
                let xmk = initial_cluster_variable(&cd, -(k as i64));
                assert_eq!(xmk, a_fundamental(rank, k), "{kind}{rank} vertex -{k}");
            }
        }
    }

    /// [DERIVED] symbolic factorization roundtrip for type C, ranks 2 and 3.
    #[test]
    fn factorization_roundtrip_symbolic() {
        for r in 2..=3 {
            assert!(factorization_roundtrip(&CartanData::new(Kind::C, r)), "rank {r}");
        }
    }

    /// [DERIVED] exact-rational evaluation agrees with the symbolic
    /// substitution on a fixed integer point.
    #[test]
    fn rational_evaluation() {
        let cd = CartanData::new(Kind::C, 2);
        let phi = phi_values(&cd);
        let psi = psi_values(&cd);
        let mut point = BTreeMap::new();
        for s in 1..=2 {
            for i in 1..=2u32 {
                point.insert(VarRef { row: s, color: i }, (3 * s as i64 + i as i64) % 7 + 2);
            }
        }
        for ((j, l), p) in &psi {
            let composed = substitute_monomial(2, p, &phi);
            let (n, d) = eval_monomial_rational(&composed, &point);
            let y = point[&VarRef { row: *j, color: *l }];
            assert_eq!(n, BigInt::from(y) * d, "slot ({j},{l})");
        }
    }

    /// [DERIVED] the coroot/unipotent commutation on every classical type of
    /// small rank.
    #[test]
    fn commutation_small_ranks() {
        for (kind, rank) in [(Kind::A, 2), (Kind::B, 2), (Kind::C, 3), (Kind::D, 3)] {
            assert!(commutation_check(&CartanData::new(kind, rank)), "{kind}{rank}");
        }
    }
}
