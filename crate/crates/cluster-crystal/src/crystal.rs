//! Monomial realization of crystals: Kashiwara operators acting on Laurent
//! monomials in the variables `Y_{s,i}` through the monomials `A_{s,i}`,
//! plus Demazure crystal generation and component exploration.
//!
//! The realization uses the position set `p_{j,i} = 1` iff `j > i` (and `0`
//! otherwise), so
//! `A_{s,i} = Y_{s,i} Y_{s+1,i} ∏_{j<i} Y_{s,j}^{a_{j,i}} ∏_{j>i} Y_{s+1,j}^{a_{j,i}}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::laurent::{Monomial, TorusWeight};
use crate::rootdata::CartanData;

/// The weight of a monomial: `wt(∏ Y_{s,i}^{ζ_{s,i}}) = Σ ζ_{s,i} Λ_i`.
pub fn monomial_weight(rank: usize, m: &Monomial) -> TorusWeight {
    let mut coeffs = alloc::vec![0i64; rank];
    for (v, &e) in m.exps() {
        let i = v.color as usize;
        if i >= 1 && i <= rank {
            coeffs[i - 1] += e;
        }
    }
    TorusWeight { coeffs }
}

/// The exponents of color `i` as a sorted list of `(row, ζ_{row,i})`.
fn color_profile(m: &Monomial, i: usize) -> Vec<(i32, i64)> {
    m.exps()
        .filter(|(v, _)| v.color as usize == i)
        .map(|(v, &e)| (v.row, e))
        .collect()
}

/// `φ_i` and `ε_i` of a monomial: `φ_i` is the maximum of the prefix sums
/// `Σ_{s≤n} ζ_{s,i}` (including the empty prefix, 0), and
/// `ε_i = φ_i − ⟨h_i, wt⟩`.
pub fn crystal_stats(rank: usize, m: &Monomial, i: usize) -> (i64, i64) {
    let profile = color_profile(m, i);
    let mut prefix = 0i64;
    let mut phi = 0i64;
    for &(_, z) in &profile {
        prefix += z;
        if prefix > phi {
            phi = prefix;
        }
    }
    let wt_i = monomial_weight(rank, m).pair_coroot(i);
    (phi, phi - wt_i)
}

/// The monomial `A_{s,i}`.
pub fn a_si(cd: &CartanData, s: i32, i: usize) -> Monomial {
    let rank = cd.rank;
    let mut triples: Vec<(i32, u32, i64)> = alloc::vec![(s, i as u32, 1), (s + 1, i as u32, 1)];
    for j in 1..=rank {
        if j == i || cd.a(j, i) == 0 {
            continue;
        }
        let row = if j > i { s + 1 } else { s };
        triples.push((row, j as u32, cd.a(j, i)));
    }
    Monomial::from_exps(rank, &triples)
}

/// The Kashiwara lowering operator `f̃_i`: returns `A_{n_f,i}^{−1}·m` where
/// `n_f` is the smallest row at which the prefix sum attains `φ_i`, or
/// `None` when `φ_i = 0`.
pub fn kashiwara_f(cd: &CartanData, m: &Monomial, i: usize) -> Option<Monomial> {
    let (phi, _) = crystal_stats(cd.rank, m, i);
    if phi <= 0 {
        return None;
    }
    let profile = color_profile(m, i);
    let mut prefix = 0i64;
    for &(row, z) in &profile {
        prefix += z;
        if prefix == phi {
            return Some(a_si(cd, row, i).inv().mul(m));
        }
    }
    unreachable!("phi > 0 must be attained by some prefix");
}

/// The Kashiwara raising operator `ẽ_i`: returns `A_{n_e,i}·m` where `n_e`
/// is the largest row index at which the prefix sum still equals `φ_i`
/// (i.e. one less than the next row carrying a nonzero exponent), or `None`
/// when `ε_i = 0`.
pub fn kashiwara_e(cd: &CartanData, m: &Monomial, i: usize) -> Option<Monomial> {
    let (phi, eps) = crystal_stats(cd.rank, m, i);
    if eps <= 0 {
        return None;
    }
    let profile = color_profile(m, i);
    // Largest t (possibly 0) with P_t = φ; since ε > 0 the prefix drops
    // below φ afterwards, so t < m and n_e = r_{t+1} − 1.
    let mut prefix = 0i64;
    let mut t_best: usize = 0;
    for (t, &(_, z)) in profile.iter().enumerate() {
        prefix += z;
        if prefix == phi {
            t_best = t + 1;
        }
    }
    debug_assert!(t_best < profile.len());
    let n_e = profile[t_best].0 - 1;
    Some(a_si(cd, n_e, i).mul(m))
}

/// The outcome of Demazure crystal generation.
#[derive(Clone, Debug)]
pub struct DemazureResult {
    /// The monomials of the Demazure crystal, the highest one included.
    pub monomials: BTreeSet<Monomial>,
    /// Collisions observed during generation: `(preimage_a, preimage_b,
    /// image)` where two distinct monomials were sent to the same image by
    /// the same `f̃_i`. Empty in the faithful (injective) case.
    pub collisions: Vec<(Monomial, Monomial, Monomial)>,
}

/// Generates the monomial Demazure crystal `B_w(λ)` from a highest monomial.
///
/// `word` is `w = s_{i_1} ⋯ s_{i_n}` given left-to-right; the generation
/// closes under `f̃_{i_t}`-strings for `t = n` down to `1`.
///
/// # Panics
/// If the highest monomial is not a highest-weight monomial
/// (`ε_i ≠ 0` for some `i`).
pub fn demazure_monomials(cd: &CartanData, highest: &Monomial, word: &[u32]) -> DemazureResult {
    for i in 1..=cd.rank {
        let (_, eps) = crystal_stats(cd.rank, highest, i);
        assert_eq!(eps, 0, "seed monomial is not highest weight at node {i}");
    }
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    set.insert(highest.clone());
    let mut collisions = Vec::new();
    for &i in word.iter().rev() {
        let i = i as usize;
        let mut produced: BTreeMap<Monomial, Monomial> = BTreeMap::new();
        let mut frontier: Vec<Monomial> = set.iter().cloned().collect();
        while let Some(m) = frontier.pop() {
            if let Some(img) = kashiwara_f(cd, &m, i) {
                if let Some(prev) = produced.get(&img) {
                    if prev != &m {
                        collisions.push((prev.clone(), m.clone(), img.clone()));
                    }
                } else {
                    produced.insert(img.clone(), m.clone());
                    if set.insert(img.clone()) {
                        frontier.push(img);
                    }
                }
            }
        }
    }
    DemazureResult { monomials: set, collisions }
}

/// Explores the connected crystal component of `m` under `f̃_i` and `ẽ_i`.
/// Returns the visited set and whether the node cap was hit.
pub fn crystal_component(cd: &CartanData, m: &Monomial, cap: usize) -> (BTreeSet<Monomial>, bool) {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = alloc::vec![m.clone()];
    while let Some(cur) = frontier.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        if seen.len() >= cap {
            return (seen, true);
        }
        for i in 1..=cd.rank {
            if let Some(next) = kashiwara_f(cd, &cur, i) {
                if !seen.contains(&next) {
                    frontier.push(next);
                }
            }
            if let Some(next) = kashiwara_e(cd, &cur, i) {
                if !seen.contains(&next) {
                    frontier.push(next);
                }
            }
        }
    }
    (seen, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Kind;

    /// `(row, color, exponent)` triples of a monomial.
    type Exps = [(i32, u32, i64)];

    fn mono(rank: usize, triples: &Exps) -> Monomial {
        Monomial::from_exps(rank, triples)
    }

    /// [PAPER] the `A_{s,i}` monomials in types C₂, B₂, B₃.
    #[test]
    fn a_monomials() {
        let c2 = CartanData::new(Kind::C, 2);
        assert_eq!(a_si(&c2, 3, 1), mono(2, &[(3, 1, 1), (4, 1, 1), (4, 2, -1)]));
        assert_eq!(a_si(&c2, 3, 2), mono(2, &[(3, 2, 1), (4, 2, 1), (3, 1, -2)]));
        let b2 = CartanData::new(Kind::B, 2);
        assert_eq!(a_si(&b2, 1, 1), mono(2, &[(1, 1, 1), (2, 1, 1), (2, 2, -2)]));
        assert_eq!(a_si(&b2, 1, 2), mono(2, &[(1, 2, 1), (2, 2, 1), (1, 1, -1)]));
        let b3 = CartanData::new(Kind::B, 3);
        assert_eq!(
            a_si(&b3, 2, 2),
            mono(3, &[(2, 2, 1), (3, 2, 1), (2, 1, -1), (3, 3, -2)])
        );
        assert_eq!(a_si(&b3, 2, 3), mono(3, &[(2, 3, 1), (3, 3, 1), (2, 2, -1)]));
    }

    /// [PAPER] the 4-vertex `f̃`-chain in C₂ starting from `Y_{1,1}`.
    #[test]
    fn chain_c2_from_y11() {
        let c2 = CartanData::new(Kind::C, 2);
        let m0 = mono(2, &[(1, 1, 1)]);
        let m1 = kashiwara_f(&c2, &m0, 1).unwrap();
        assert_eq!(m1, mono(2, &[(2, 2, 1), (2, 1, -1)]));
        let m2 = kashiwara_f(&c2, &m1, 2).unwrap();
        assert_eq!(m2, mono(2, &[(2, 1, 1), (3, 2, -1)]));
        let m3 = kashiwara_f(&c2, &m2, 1).unwrap();
        assert_eq!(m3, mono(2, &[(3, 1, -1)]));
        assert!(kashiwara_f(&c2, &m3, 1).is_none());
        assert!(kashiwara_f(&c2, &m3, 2).is_none());
        // The other operators vanish along the chain.
        assert!(kashiwara_f(&c2, &m0, 2).is_none());
        assert!(kashiwara_f(&c2, &m1, 1).is_none());
        assert!(kashiwara_f(&c2, &m2, 2).is_none());
    }

    /// [PAPER] the 5-vertex `f̃`-chain in C₂ starting from `Y_{1,2}`.
    #[test]
    fn chain_c2_from_y12() {
        let c2 = CartanData::new(Kind::C, 2);
        let m0 = mono(2, &[(1, 2, 1)]);
        let m1 = kashiwara_f(&c2, &m0, 2).unwrap();
        assert_eq!(m1, mono(2, &[(1, 1, 2), (2, 2, -1)]));
        let m2 = kashiwara_f(&c2, &m1, 1).unwrap();
        assert_eq!(m2, mono(2, &[(1, 1, 1), (2, 1, -1)]));
        let m3 = kashiwara_f(&c2, &m2, 1).unwrap();
        assert_eq!(m3, mono(2, &[(2, 2, 1), (2, 1, -2)]));
        let m4 = kashiwara_f(&c2, &m3, 2).unwrap();
        assert_eq!(m4, mono(2, &[(3, 2, -1)]));
        for i in 1..=2 {
            assert!(kashiwara_f(&c2, &m4, i).is_none());
        }
    }

    /// [PAPER] the 7-vertex chain in B₃ starting from `Y_{1,1}`.
    #[test]
    fn chain_b3_from_y11() {
        let b3 = CartanData::new(Kind::B, 3);
        let steps: [(usize, &Exps); 6] = [
            (1, &[(2, 2, 1), (2, 1, -1)]),
            (2, &[(3, 3, 2), (3, 2, -1)]),
            (3, &[(3, 3, 1), (4, 3, -1)]),
            (3, &[(3, 2, 1), (4, 3, -2)]),
            (2, &[(3, 1, 1), (4, 2, -1)]),
            (1, &[(4, 1, -1)]),
        ];
        let mut m = mono(3, &[(1, 1, 1)]);
        for (i, expect) in steps {
            m = kashiwara_f(&b3, &m, i).unwrap();
            assert_eq!(m, mono(3, expect));
        }
        for i in 1..=3 {
            assert!(kashiwara_f(&b3, &m, i).is_none());
        }
    }

    /// [PAPER] `ẽ_1(Y_{2,2}/Y_{2,1}) = Y_{1,1}` in C₂, and `ẽ`/`f̃` are
    /// mutually inverse along the example chains.
    #[test]
    fn raising_inverts_lowering() {
        let c2 = CartanData::new(Kind::C, 2);
        let m1 = mono(2, &[(2, 2, 1), (2, 1, -1)]);
        assert_eq!(kashiwara_e(&c2, &m1, 1), Some(mono(2, &[(1, 1, 1)])));
        // Full inverse sweep along the 5-chain.
        let mut m = mono(2, &[(1, 2, 1)]);
        for i in [2usize, 1, 1, 2] {
            let next = kashiwara_f(&c2, &m, i).unwrap();
            assert_eq!(kashiwara_e(&c2, &next, i), Some(m.clone()));
            m = next;
        }
    }

    /// [DERIVED] `φ_i − ε_i = ⟨h_i, wt⟩` by construction, checked on a mixed
    /// bag of monomials.
    #[test]
    fn phi_minus_eps_is_weight() {
        let samples = [
            mono(3, &[(1, 1, 1)]),
            mono(3, &[(2, 2, 1), (2, 1, -1)]),
            mono(3, &[(1, 3, 2), (2, 2, -1), (4, 1, 3)]),
            mono(3, &[(1, 2, -2), (3, 2, 2), (5, 1, 1)]),
        ];
        for m in &samples {
            let wt = monomial_weight(3, m);
            for i in 1..=3 {
                let (phi, eps) = crystal_stats(3, m, i);
                assert_eq!(phi - eps, wt.pair_coroot(i), "{m} node {i}");
                assert!(phi >= 0 && eps >= 0);
            }
        }
    }

    /// [DERIVED] the Demazure crystal of `Y_{1,1}` in C₂ along the word
    /// `s_1 s_2 s_1` is exactly the 4-vertex chain; shorter words give the
    /// prefixes of the chain.
    #[test]
    fn demazure_c2_chain() {
        let c2 = CartanData::new(Kind::C, 2);
        let hi = mono(2, &[(1, 1, 1)]);
        let full = demazure_monomials(&c2, &hi, &[1, 2, 1]);
        assert_eq!(full.monomials.len(), 4);
        assert!(full.collisions.is_empty());
        assert!(full.monomials.contains(&mono(2, &[(3, 1, -1)])));
        let one = demazure_monomials(&c2, &hi, &[1]);
        assert_eq!(one.monomials.len(), 2);
        let none = demazure_monomials(&c2, &hi, &[]);
        assert_eq!(none.monomials.len(), 1);
        // Word order matters: s_2 alone fixes Y_{1,1}.
        let two = demazure_monomials(&c2, &hi, &[2]);
        assert_eq!(two.monomials.len(), 1);
    }

    /// [DERIVED] crystal components: `Y_{1,1}` in C₂ generates the 4-element
    /// vector-representation crystal; the cap flag trips when set too low.
    #[test]
    fn component_exploration() {
        let c2 = CartanData::new(Kind::C, 2);
        let m = mono(2, &[(1, 1, 1)]);
        let (set, capped) = crystal_component(&c2, &m, 100);
        assert_eq!(set.len(), 4);
        assert!(!capped);
        let (_, capped) = crystal_component(&c2, &m, 2);
        assert!(capped);
        // B₃ vector crystal from Y_{1,1} has 7 elements.
        let b3 = CartanData::new(Kind::B, 3);
        let (set, capped) = crystal_component(&b3, &mono(3, &[(1, 1, 1)]), 100);
        assert_eq!(set.len(), 7);
        assert!(!capped);
    }
}
