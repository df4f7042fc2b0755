//! Weight bases and group-element actions for the fundamental
//! representations: wedge powers of the vector representation and the spin
//! representations, plus the contravariant bilinear pairing.
//!
//! Basis letters of the vector representation `V(Λ_1)` and their order:
//!
//! * type A: `1 < 2 < … < r+1`;
//! * type B: `1 < … < r < 0 < r̄ < … < 1̄`;
//! * type C: `1 < … < r < r̄ < … < 1̄`;
//! * type D: `1 < … < r < r̄ < … < 1̄` (a fixed refinement `r < r̄` of the
//!   usual partial order).
//!
//! Supported fundamental representations `V(Λ_j)`: wedge powers `Λ^j V(Λ_1)`
//! for all `j` in types A and C, for `j ≤ r−1` in type B and `j ≤ r−2` in
//! type D; the spin representations for `j = r` in type B and
//! `j ∈ {r−1, r}` in type D.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::laurent::{LaurentPoly, Monomial, TorusWeight};
use crate::rootdata::{CartanData, Kind};

/// A basis letter of the vector representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    /// `v_i`, `1 ≤ i`.
    Pos(u32),
    /// `v_0` (type B only).
    Zero,
    /// `v_ī`, `1 ≤ i ≤ r`.
    Neg(u32),
}

/// Position of a letter in the total order of the vector basis.
fn letter_key(kind: Kind, rank: usize, l: Letter) -> i64 {
    let r = rank as i64;
    match l {
        Letter::Pos(i) => i as i64,
        Letter::Zero => r + 1,
        Letter::Neg(i) => match kind {
            Kind::B => 2 * r + 2 - i as i64,
            _ => 2 * r + 1 - i as i64,
        },
    }
}

/// The weight of a letter in the fundamental-weight basis.
fn letter_weight(kind: Kind, rank: usize, l: Letter) -> TorusWeight {
    let r = rank;
    let fw = |k: usize| TorusWeight::fundamental(r, k);
    let unbarred = |i: usize| -> TorusWeight {
        match kind {
            Kind::A => {
                // Λ_{r+1} = 0.
                let hi = if i == r + 1 { TorusWeight::zero(r) } else { fw(i) };
                hi.add(&fw(i - 1).neg())
            }
            Kind::B if i == r => fw(r).scale(2).add(&fw(r - 1).neg()),
            Kind::D if i == r - 1 => fw(r - 1).add(&fw(r)).add(&fw(r - 2).neg()),
            Kind::D if i == r => fw(r).add(&fw(r - 1).neg()),
            _ => fw(i).add(&fw(i - 1).neg()),
        }
    };
    match l {
        Letter::Pos(i) => unbarred(i as usize),
        Letter::Zero => TorusWeight::zero(r),
        Letter::Neg(i) => unbarred(i as usize).neg(),
    }
}

/// One Chevalley step `f_i` (lowering) or `e_i` (raising) on a letter,
/// returning the image letter and its integer coefficient.
fn chevalley_step(
    kind: Kind,
    rank: usize,
    i: usize,
    lowering: bool,
    l: Letter,
) -> Option<(Letter, i64)> {
    let r = rank as u32;
    let i = i as u32;
    let last = if kind == Kind::A { r + 1 } else { r };
    debug_assert!(i >= 1 && i <= r);
    if kind == Kind::A || i < r {
        // Generic node: f_i v_i = v_{i+1}, f_i v_{bar(i+1)} = v_bar(i).
        return match (lowering, l) {
            (true, Letter::Pos(j)) if j == i && j < last => Some((Letter::Pos(i + 1), 1)),
            (true, Letter::Neg(j)) if j == i + 1 => Some((Letter::Neg(i), 1)),
            (false, Letter::Pos(j)) if j == i + 1 => Some((Letter::Pos(i), 1)),
            (false, Letter::Neg(j)) if j == i => Some((Letter::Neg(i + 1), 1)),
            _ => None,
        };
    }
    // i == r in types B, C, D.
    match kind {
        Kind::B => match (lowering, l) {
            (true, Letter::Pos(j)) if j == r => Some((Letter::Zero, 1)),
            (true, Letter::Zero) => Some((Letter::Neg(r), 2)),
            (false, Letter::Neg(j)) if j == r => Some((Letter::Zero, 1)),
            (false, Letter::Zero) => Some((Letter::Pos(r), 2)),
            _ => None,
        },
        Kind::C => match (lowering, l) {
            (true, Letter::Pos(j)) if j == r => Some((Letter::Neg(r), 1)),
            (false, Letter::Neg(j)) if j == r => Some((Letter::Pos(r), 1)),
            _ => None,
        },
        Kind::D => match (lowering, l) {
            (true, Letter::Pos(j)) if j == r - 1 => Some((Letter::Neg(r), 1)),
            (true, Letter::Pos(j)) if j == r => Some((Letter::Neg(r - 1), 1)),
            (false, Letter::Neg(j)) if j == r => Some((Letter::Pos(r - 1), 1)),
            (false, Letter::Neg(j)) if j == r - 1 => Some((Letter::Pos(r), 1)),
            _ => None,
        },
        Kind::A => unreachable!(),
    }
}

/// One Kashiwara/Chevalley step on a spin sign vector (`f_i² = 0`, all
/// coefficients 1).
fn spin_step(kind: Kind, rank: usize, i: usize, lowering: bool, signs: &[i8]) -> Option<Vec<i8>> {
    let r = rank;
    let flip2 = |a: usize, b: usize, from: (i8, i8)| -> Option<Vec<i8>> {
        if (signs[a], signs[b]) == from {
            let mut out = signs.to_vec();
            out[a] = -from.0;
            out[b] = -from.1;
            Some(out)
        } else {
            None
        }
    };
    if i < r {
        let from = if lowering { (1, -1) } else { (-1, 1) };
        flip2(i - 1, i, from)
    } else {
        match kind {
            Kind::B => {
                let from = if lowering { 1 } else { -1 };
                if signs[r - 1] == from {
                    let mut out = signs.to_vec();
                    out[r - 1] = -from;
                    Some(out)
                } else {
                    None
                }
            }
            Kind::D => {
                let from = if lowering { (1, 1) } else { (-1, -1) };
                flip2(r - 2, r - 1, from)
            }
            _ => None,
        }
    }
}

/// The weight of a spin sign vector: `⟨h_i, wt⟩ = (ε_i − ε_{i+1})/2` for
/// `i < r`; `ε_r` for `i = r` in type B; `(ε_{r−1} + ε_r)/2` in type D.
fn spin_weight(kind: Kind, rank: usize, signs: &[i8]) -> TorusWeight {
    let r = rank;
    let mut coeffs = vec![0i64; r];
    for i in 1..r {
        coeffs[i - 1] = (signs[i - 1] as i64 - signs[i] as i64) / 2;
    }
    coeffs[r - 1] = match kind {
        Kind::B => signs[r - 1] as i64,
        Kind::D => (signs[r - 2] as i64 + signs[r - 1] as i64) / 2,
        _ => panic!("spin weight only defined for types B and D"),
    };
    TorusWeight { coeffs }
}

/// A basis vector of a fundamental representation: either a wedge of vector
/// letters (stored sorted in the type order) or a spin sign vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisVec {
    /// `u_{l_1} ∧ … ∧ u_{l_j}` with `l_1 < … < l_j` in the type order.
    Wedge(Vec<Letter>),
    /// A spin vector `(ε_1, …, ε_r)`, each entry `±1`.
    Spin(Vec<i8>),
}

impl BasisVec {
    /// The weight of this basis vector in the fundamental-weight basis.
    pub fn weight(&self, kind: Kind, rank: usize) -> TorusWeight {
        match self {
            BasisVec::Wedge(ls) => ls
                .iter()
                .fold(TorusWeight::zero(rank), |acc, &l| acc.add(&letter_weight(kind, rank, l))),
            BasisVec::Spin(signs) => spin_weight(kind, rank, signs),
        }
    }

    /// The squared norm under the contravariant pairing (the product of the
    /// factor norms; every letter has norm 1 except `v_0` in type B, which
    /// has norm 2; spin vectors have norm 1).
    pub fn norm(&self) -> i64 {
        match self {
            BasisVec::Wedge(ls) => ls.iter().map(|l| if *l == Letter::Zero { 2 } else { 1 }).product(),
            BasisVec::Spin(_) => 1,
        }
    }
}

/// Sorts a list of letters into the type order, returning the sorted list
/// and the sign of the permutation, or `None` if two letters coincide.
fn sort_wedge(kind: Kind, rank: usize, mut ls: Vec<Letter>) -> Option<(Vec<Letter>, i64)> {
    let mut sign = 1i64;
    // Insertion sort counting transpositions; wedges are short.
    for i in 1..ls.len() {
        let mut j = i;
        while j > 0 {
            let ka = letter_key(kind, rank, ls[j - 1]);
            let kb = letter_key(kind, rank, ls[j]);
            if ka == kb {
                return None;
            }
            if ka > kb {
                ls.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            } else {
                break;
            }
        }
    }
    // Adjacent duplicates found during the sweep; also catch the sorted case.
    for w in ls.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((ls, sign))
}

/// An element of a fundamental representation: a finite sum of basis vectors
/// with Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepElement {
    /// Cartan–Killing type.
    pub kind: Kind,
    /// Rank `r`.
    pub rank: usize,
    terms: BTreeMap<BasisVec, LaurentPoly>,
}

impl RepElement {
    /// The zero element.
    pub fn zero(kind: Kind, rank: usize) -> Self {
        RepElement { kind, rank, terms: BTreeMap::new() }
    }

    /// The basis vector `b` with coefficient 1.
    pub fn from_basis(kind: Kind, rank: usize, b: BasisVec) -> Self {
        let mut e = RepElement::zero(kind, rank);
        e.add_term(b, LaurentPoly::one(rank));
        e
    }

    fn add_term(&mut self, b: BasisVec, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let rank = self.rank;
        let entry = self.terms.entry(b).or_insert_with(|| LaurentPoly::zero(rank));
        *entry = entry.add(&c);
        if entry.is_zero() {
            // Keep the map free of explicit zeros.
            let keys: Vec<BasisVec> =
                self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    /// Iterates over the (basis vector, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisVec, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Whether the element is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of two elements.
    pub fn add(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    /// Scales every coefficient by the Laurent polynomial `p`.
    pub fn scale_poly(&self, p: &LaurentPoly) -> RepElement {
        let mut out = RepElement::zero(self.kind, self.rank);
        for (b, c) in self.terms() {
            out.add_term(b.clone(), c.mul(p));
        }
        out
    }

    /// The coefficient of the basis vector `b` (zero if absent).
    pub fn coefficient(&self, b: &BasisVec) -> LaurentPoly {
        self.terms.get(b).cloned().unwrap_or_else(|| LaurentPoly::zero(self.rank))
    }

    /// Applies the one-parameter unipotent `x_i(t) = exp(t e_i)`.
    pub fn apply_x(&self, i: usize, t: &LaurentPoly) -> RepElement {
        self.apply_exp(i, t, false)
    }

    /// Applies the one-parameter unipotent `y_i(t) = exp(t f_i)`.
    pub fn apply_y(&self, i: usize, t: &LaurentPoly) -> RepElement {
        self.apply_exp(i, t, true)
    }

    fn apply_exp(&self, i: usize, t: &LaurentPoly, lowering: bool) -> RepElement {
        let (kind, rank) = (self.kind, self.rank);
        let mut out = RepElement::zero(kind, rank);
        for (b, c) in self.terms() {
            match b {
                BasisVec::Wedge(ls) => {
                    // exp(t·D) on a wedge is the factorwise product of the
                    // one-letter exponentials.
                    let mut partial: Vec<(Vec<Letter>, LaurentPoly)> =
                        vec![(Vec::new(), c.clone())];
                    for &l in ls {
                        let images = letter_exp(kind, rank, i, lowering, t, l);
                        let mut next = Vec::new();
                        for (w, pc) in &partial {
                            for (img, ic) in &images {
                                let mut neww = w.clone();
                                neww.push(*img);
                                if let Some((sorted, sign)) = sort_wedge(kind, rank, neww) {
                                    next.push((sorted, pc.mul(ic).scale(&BigInt::from(sign))));
                                }
                            }
                        }
                        partial = next;
                    }
                    for (w, pc) in partial {
                        out.add_term(BasisVec::Wedge(w), pc);
                    }
                }
                BasisVec::Spin(signs) => {
                    out.add_term(b.clone(), c.clone());
                    if let Some(flipped) = spin_step(kind, rank, i, lowering, signs) {
                        out.add_term(BasisVec::Spin(flipped), c.mul(t));
                    }
                }
            }
        }
        out
    }

    /// Applies the Chevalley generator `f_i` (`lowering = true`) or `e_i`
    /// as a derivation on wedges / a flip on spin vectors.
    pub fn apply_chevalley(&self, i: usize, lowering: bool) -> RepElement {
        let (kind, rank) = (self.kind, self.rank);
        let mut out = RepElement::zero(kind, rank);
        for (b, c) in self.terms() {
            match b {
                BasisVec::Wedge(ls) => {
                    for (k, &l) in ls.iter().enumerate() {
                        if let Some((img, coef)) = chevalley_step(kind, rank, i, lowering, l) {
                            let mut neww = ls.clone();
                            neww[k] = img;
                            if let Some((sorted, sign)) = sort_wedge(kind, rank, neww) {
                                out.add_term(
                                    BasisVec::Wedge(sorted),
                                    c.scale(&BigInt::from(coef * sign)),
                                );
                            }
                        }
                    }
                }
                BasisVec::Spin(signs) => {
                    if let Some(flipped) = spin_step(kind, rank, i, lowering, signs) {
                        out.add_term(BasisVec::Spin(flipped), c.clone());
                    }
                }
            }
        }
        out
    }

    /// Applies the coweight torus element `α_i^∨(t)`: the coefficient of a
    /// weight vector `v` is multiplied by `t^{⟨h_i, wt(v)⟩}`.
    pub fn apply_alpha_coroot(&self, i: usize, t: &Monomial) -> RepElement {
        let (kind, rank) = (self.kind, self.rank);
        let mut out = RepElement::zero(kind, rank);
        for (b, c) in self.terms() {
            let m = b.weight(kind, rank).pair_coroot(i);
            out.add_term(b.clone(), c.mul_monomial(&t.pow(m)));
        }
        out
    }

    /// Applies the formal torus element `a`: the coefficient of a weight
    /// vector `v` is multiplied by `a^{wt(v)}`.
    pub fn apply_torus_a(&self) -> RepElement {
        let (kind, rank) = (self.kind, self.rank);
        let mut out = RepElement::zero(kind, rank);
        for (b, c) in self.terms() {
            out.add_term(b.clone(), c.mul_monomial(&Monomial::a_pow(b.weight(kind, rank))));
        }
        out
    }

    /// Applies the simple-reflection representative
    /// `s̄_i = x_i(−1) y_i(1) x_i(−1)`.
    pub fn apply_sbar(&self, i: usize) -> RepElement {
        let rank = self.rank;
        let minus_one = LaurentPoly::constant(rank, -1);
        let one = LaurentPoly::one(rank);
        self.apply_x(i, &minus_one).apply_y(i, &one).apply_x(i, &minus_one)
    }

    /// The contravariant pairing `⟨self, other⟩` (diagonal on the weight
    /// basis; see [`BasisVec::norm`]).
    pub fn pairing(&self, other: &RepElement) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (b, c) in self.terms() {
            let oc = other.terms.get(b);
            if let Some(oc) = oc {
                out = out.add(&c.mul(oc).scale(&BigInt::from(b.norm())));
            }
        }
        out
    }
}

/// The exponential of one Chevalley step on a single letter:
/// `l + t·(step l) + t²·(step² l)/2` (the quadratic term arises only for
/// `f_r`/`e_r` in type B, where it is `t²` with coefficient 1).
fn letter_exp(
    kind: Kind,
    rank: usize,
    i: usize,
    lowering: bool,
    t: &LaurentPoly,
    l: Letter,
) -> Vec<(Letter, LaurentPoly)> {
    let mut out = vec![(l, LaurentPoly::one(rank))];
    if let Some((l1, c1)) = chevalley_step(kind, rank, i, lowering, l) {
        out.push((l1, t.scale(&BigInt::from(c1))));
        if let Some((l2, c2)) = chevalley_step(kind, rank, i, lowering, l1) {
            let c = c1 * c2;
            debug_assert_eq!(c % 2, 0);
            out.push((l2, t.mul(t).scale(&BigInt::from(c / 2))));
        }
    }
    out
}

/// The letters of the vector representation `V(Λ_1)` in increasing order.
pub fn vector_letters(kind: Kind, rank: usize) -> Vec<Letter> {
    let r = rank as u32;
    let mut out = Vec::new();
    match kind {
        Kind::A => {
            for i in 1..=r + 1 {
                out.push(Letter::Pos(i));
            }
        }
        Kind::B => {
            for i in 1..=r {
                out.push(Letter::Pos(i));
            }
            out.push(Letter::Zero);
            for i in (1..=r).rev() {
                out.push(Letter::Neg(i));
            }
        }
        Kind::C | Kind::D => {
            for i in 1..=r {
                out.push(Letter::Pos(i));
            }
            for i in (1..=r).rev() {
                out.push(Letter::Neg(i));
            }
        }
    }
    out
}

/// A fundamental representation `V(Λ_j)` with its concrete model.
#[derive(Clone, Debug)]
pub struct FundRep {
    /// Cartan–Killing type.
    pub kind: Kind,
    /// Rank `r`.
    pub rank: usize,
    /// The fundamental-weight index `j ∈ [1, r]`.
    pub fund: usize,
}

impl FundRep {
    /// Builds `V(Λ_j)`.
    ///
    /// # Panics
    /// If `j ∉ [1, r]`.
    pub fn new(cd: &CartanData, fund: usize) -> Self {
        assert!(fund >= 1 && fund <= cd.rank, "fundamental index out of range");
        FundRep { kind: cd.kind, rank: cd.rank, fund }
    }

    /// Whether this representation is realized as a spin module.
    pub fn is_spin(&self) -> bool {
        match self.kind {
            Kind::B => self.fund == self.rank,
            Kind::D => self.fund >= self.rank - 1,
            _ => false,
        }
    }

    /// The highest-weight vector `u_{Λ_j}` (coefficient 1).
    pub fn highest(&self) -> RepElement {
        let b = if self.is_spin() {
            let mut signs = vec![1i8; self.rank];
            if self.kind == Kind::D && self.fund == self.rank - 1 {
                signs[self.rank - 1] = -1;
            }
            BasisVec::Spin(signs)
        } else {
            BasisVec::Wedge((1..=self.fund as u32).map(Letter::Pos).collect())
        };
        RepElement::from_basis(self.kind, self.rank, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarRef;

    fn sym(rank: usize, row: i32) -> LaurentPoly {
        // A fresh symbolic parameter: a variable with an out-of-band row.
        LaurentPoly::var(rank, row, 1)
    }

    fn wedge(kind: Kind, rank: usize, ls: &[Letter]) -> RepElement {
        RepElement::from_basis(kind, rank, BasisVec::Wedge(ls.to_vec()))
    }

    /// [DERIVED] `f_i` lowers the weight by `α_i` on every letter and every
    /// spin vector where it is nonzero.
    #[test]
    fn chevalley_lowers_by_simple_root() {
        for (kind, rank) in [(Kind::A, 3), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let cd = CartanData::new(kind, rank);
            for &l in &vector_letters(kind, rank) {
                for i in 1..=rank {
                    if let Some((img, _)) = chevalley_step(kind, rank, i, true, l) {
                        let got = letter_weight(kind, rank, img);
                        let want =
                            letter_weight(kind, rank, l).add(&cd.simple_root(i).neg());
                        assert_eq!(got, want, "{kind}{rank} f_{i} on {l:?}");
                    }
                }
            }
        }
        for (kind, rank) in [(Kind::B, 3), (Kind::D, 4)] {
            let cd = CartanData::new(kind, rank);
            // All sign vectors.
            for mask in 0..(1u32 << rank) {
                let signs: Vec<i8> =
                    (0..rank).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect();
                for i in 1..=rank {
                    if let Some(f) = spin_step(kind, rank, i, true, &signs) {
                        let got = spin_weight(kind, rank, &f);
                        let want = spin_weight(kind, rank, &signs).add(&cd.simple_root(i).neg());
                        assert_eq!(got, want, "{kind}{rank} spin f_{i} on {signs:?}");
                    }
                }
            }
        }
    }

    /// [DERIVED] the weights of the vector representation sum to zero.
    #[test]
    fn vector_weights_sum_to_zero() {
        for (kind, rank) in [(Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let total = vector_letters(kind, rank)
                .into_iter()
                .fold(TorusWeight::zero(rank), |acc, l| acc.add(&letter_weight(kind, rank, l)));
            assert!(total.is_zero(), "{kind}{rank}");
        }
    }

    /// [PAPER] in type B, `exp(t f_r) v_r = v_r + t v_0 + t² v_r̄`.
    #[test]
    fn type_b_quadratic_exponential() {
        let rank = 2;
        let t = sym(rank, 50);
        let v = wedge(Kind::B, rank, &[Letter::Pos(2)]);
        let got = v.apply_y(2, &t);
        assert_eq!(got.coefficient(&BasisVec::Wedge(vec![Letter::Pos(2)])), LaurentPoly::one(rank));
        assert_eq!(got.coefficient(&BasisVec::Wedge(vec![Letter::Zero])), t);
        assert_eq!(got.coefficient(&BasisVec::Wedge(vec![Letter::Neg(2)])), t.mul(&t));
    }

    /// [DERIVED] one-parameter subgroup law `y_i(s) y_i(t) = y_i(s+t)` on all
    /// supported fundamental representations, symbolic `s`, `t`.
    #[test]
    fn one_parameter_subgroup_law() {
        for (kind, rank) in [(Kind::A, 2), (Kind::B, 3), (Kind::C, 2), (Kind::D, 3)] {
            let cd = CartanData::new(kind, rank);
            let s = sym(rank, 60);
            let t = sym(rank, 61);
            let st = s.add(&t);
            for j in 1..=rank {
                let v = FundRep::new(&cd, j).highest();
                // Push down from the highest vector to get a generic element.
                let mut elem = v;
                for i in 1..=rank {
                    elem = elem.apply_y(i, &sym(rank, 62 + i as i32));
                }
                for i in 1..=rank {
                    let lhs = elem.apply_y(i, &t).apply_y(i, &s);
                    let rhs = elem.apply_y(i, &st);
                    assert_eq!(lhs, rhs, "{kind}{rank} fund {j} node {i}");
                    let xlhs = elem.apply_x(i, &t).apply_x(i, &s);
                    let xrhs = elem.apply_x(i, &st);
                    assert_eq!(xlhs, xrhs, "{kind}{rank} x fund {j} node {i}");
                }
            }
        }
    }

    /// [PAPER] `s̄_i v_i = v_{i+1}` and `s̄_i v_{i+1} = −v_i`.
    #[test]
    fn sbar_on_vector_rep() {
        for (kind, rank) in [(Kind::A, 2), (Kind::C, 2), (Kind::B, 3)] {
            for i in 1..rank {
                let vi = wedge(kind, rank, &[Letter::Pos(i as u32)]);
                let vi1 = wedge(kind, rank, &[Letter::Pos(i as u32 + 1)]);
                assert_eq!(vi.apply_sbar(i), vi1, "{kind}{rank} i={i}");
                assert_eq!(
                    vi1.apply_sbar(i),
                    vi.scale_poly(&LaurentPoly::constant(rank, -1)),
                    "{kind}{rank} i={i}"
                );
            }
        }
    }

    /// [PAPER] `⟨v_0, v_0⟩ = 2` in the type-B vector representation; other
    /// norms are 1.
    #[test]
    fn pairing_norms() {
        let v0 = wedge(Kind::B, 2, &[Letter::Zero]);
        assert_eq!(v0.pairing(&v0), LaurentPoly::constant(2, 2));
        let v1 = wedge(Kind::B, 2, &[Letter::Pos(1)]);
        assert_eq!(v1.pairing(&v1), LaurentPoly::one(2));
        assert_eq!(v1.pairing(&v0), LaurentPoly::zero(2));
        let spin = RepElement::from_basis(Kind::B, 2, BasisVec::Spin(vec![1, -1]));
        assert_eq!(spin.pairing(&spin), LaurentPoly::one(2));
    }

    /// [DERIVED] the highest vector of every supported `V(Λ_j)` has weight
    /// `Λ_j` and is annihilated by every `e_i`.
    #[test]
    fn highest_vectors() {
        for (kind, rank) in [(Kind::A, 3), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let cd = CartanData::new(kind, rank);
            for j in 1..=rank {
                let rep = FundRep::new(&cd, j);
                let h = rep.highest();
                let (b, c) = h.terms().next().unwrap();
                assert_eq!(c, &LaurentPoly::one(rank));
                assert_eq!(b.weight(kind, rank), TorusWeight::fundamental(rank, j));
                for i in 1..=rank {
                    assert!(h.apply_chevalley(i, false).is_zero(), "{kind}{rank} j={j} e_{i}");
                }
            }
        }
    }

    /// [DERIVED] `α_i^∨(s) x_j(t) = x_j(s^{a_{ij}} t) α_i^∨(s)` on the whole
    /// vector representation, symbolic `s`, `t` (monomial `s`).
    #[test]
    fn coroot_unipotent_commutation_vector_rep() {
        for (kind, rank) in [(Kind::A, 2), (Kind::B, 2), (Kind::C, 3), (Kind::D, 3)] {
            let cd = CartanData::new(kind, rank);
            let s = Monomial::var(rank, 70, 1);
            let t = sym(rank, 71);
            for &l in &vector_letters(kind, rank) {
                let v = wedge(kind, rank, &[l]);
                for i in 1..=rank {
                    for j in 1..=rank {
                        let lhs = v.apply_x(j, &t).apply_alpha_coroot(i, &s);
                        let scaled_t =
                            t.mul_monomial(&s.pow(cd.a(i, j)));
                        let rhs = v.apply_alpha_coroot(i, &s).apply_x(j, &scaled_t);
                        assert_eq!(lhs, rhs, "{kind}{rank} i={i} j={j} {l:?}");
                    }
                }
            }
        }
    }

    /// [DERIVED] wedge antisymmetry: transposing two letters flips the sign,
    /// and repeating a letter gives zero.
    #[test]
    fn wedge_signs() {
        let (kind, rank) = (Kind::C, 2);
        assert_eq!(
            sort_wedge(kind, rank, vec![Letter::Pos(2), Letter::Pos(1)]),
            Some((vec![Letter::Pos(1), Letter::Pos(2)], -1))
        );
        assert_eq!(sort_wedge(kind, rank, vec![Letter::Pos(1), Letter::Pos(1)]), None);
        // B order: r < 0 < r̄.
        assert_eq!(
            sort_wedge(Kind::B, 2, vec![Letter::Neg(2), Letter::Zero, Letter::Pos(2)]),
            Some((vec![Letter::Pos(2), Letter::Zero, Letter::Neg(2)], -1))
        );
    }

    /// [DERIVED] spin modules: the lowering orbit of the highest vector
    /// reaches all sign vectors of the correct parity (dimension `2^{r-1}`
    /// for type D, `2^r` for type B).
    #[test]
    fn spin_orbit_dimensions() {
        use std::collections::BTreeSet;
        for (kind, rank, fund, expect) in
            [(Kind::B, 3, 3, 8usize), (Kind::D, 3, 3, 4), (Kind::D, 3, 2, 4), (Kind::D, 4, 4, 8)]
        {
            let cd = CartanData::new(kind, rank);
            let h = FundRep::new(&cd, fund).highest();
            let start = h.terms().next().unwrap().0.clone();
            let mut seen: BTreeSet<BasisVec> = BTreeSet::new();
            let mut frontier = vec![start];
            while let Some(b) = frontier.pop() {
                if !seen.insert(b.clone()) {
                    continue;
                }
                if let BasisVec::Spin(signs) = &b {
                    for i in 1..=rank {
                        if let Some(f) = spin_step(kind, rank, i, true, signs) {
                            frontier.push(BasisVec::Spin(f));
                        }
                    }
                }
            }
            assert_eq!(seen.len(), expect, "{kind}{rank} fund {fund}");
        }
    }

    /// [DERIVED] the symbolic-parameter helper really is a fresh variable.
    #[test]
    fn symbolic_parameter_is_variable() {
        let t = sym(2, 50);
        assert_eq!(t.num_terms(), 1);
        let (m, c) = t.terms().next().unwrap();
        assert_eq!(c, &BigInt::from(1));
        assert_eq!(m.exponent(50, 1), 1);
        let _ = VarRef { row: 50, color: 1 };
    }
}
