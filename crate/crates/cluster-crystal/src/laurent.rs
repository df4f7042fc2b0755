//! Exact Laurent-polynomial arithmetic in the variables `Y_{s,i}`.
//!
//! Every monomial carries, besides its `Y`-exponents, a formal torus
//! character `a^λ` with `λ` recorded in the fundamental-weight basis
//! `{Λ_1, …, Λ_r}`.  Characters multiply by adding weights, so a product of
//! monomials adds both exponent maps and weights.  A polynomial is
//! *H-homogeneous* when all its monomials share one weight; generalized
//! minors are always H-homogeneous.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A reference to one variable `Y_{s,i}`: `row` is `s`, `color` is `i`.
///
/// Only colors in `[1, r]` are ever stored; `Y_{s,0}` and `Y_{s,j}` with
/// `j > r` denote the constant `1` and are dropped at construction time.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarRef {
    /// Row index `s` (any integer; Kashiwara operators move it freely).
    pub row: i32,
    /// Color index `i ∈ [1, r]`.
    pub color: u32,
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]", self.row, self.color)
    }
}

/// An integral weight written in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TorusWeight {
    /// Coordinates `c_i` of `Σ c_i Λ_i`; the vector length is the rank.
    pub coeffs: Vec<i64>,
}

impl TorusWeight {
    /// The zero weight for the given rank.
    pub fn zero(rank: usize) -> Self {
        TorusWeight { coeffs: vec![0; rank] }
    }

    /// The fundamental weight `Λ_k` (`1 ≤ k ≤ rank`); `k = 0` gives the zero
    /// weight, mirroring the convention `Λ_0 = 0`.
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut w = Self::zero(rank);
        if k >= 1 && k <= rank {
            w.coeffs[k - 1] = 1;
        }
        w
    }

    /// The rank this weight lives in.
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether this is the zero weight.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &TorusWeight) -> TorusWeight {
        debug_assert_eq!(self.rank(), other.rank());
        TorusWeight {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise negation.
    pub fn neg(&self) -> TorusWeight {
        TorusWeight { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    /// Integer multiple.
    pub fn scale(&self, n: i64) -> TorusWeight {
        TorusWeight { coeffs: self.coeffs.iter().map(|&c| c * n).collect() }
    }

    /// Pairing `⟨h_i, λ⟩` with the `i`-th simple coroot (`1 ≤ i ≤ rank`):
    /// in the fundamental-weight basis this is just the `i`-th coordinate.
    pub fn pair_coroot(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// Renders like `L1+2*L3-L2` (used inside `a^{…}`).
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    out.push('-');
                }
                first = false;
            } else if c < 0 {
                out.push('-');
            } else {
                out.push('+');
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                let _ = write!(out, "{}*", mag);
            }
            let _ = write!(out, "L{}", idx + 1);
        }
        if first {
            out.push('0');
        }
        out
    }
}

/// A Laurent monomial: a finite exponent map on `VarRef`s (no zero exponents
/// stored) together with its torus character.
///
/// The derived `Ord` (exponent map first, weight last) is the canonical
/// monomial order used for deterministic printing and seed canonicalization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: BTreeMap<VarRef, i64>,
    aweight: TorusWeight,
}

impl Monomial {
    /// The unit monomial `1` for the given rank.
    pub fn one(rank: usize) -> Self {
        Monomial { exps: BTreeMap::new(), aweight: TorusWeight::zero(rank) }
    }

    /// The variable `Y_{s,i}`.  Colors `0` or `> rank` denote the constant
    /// `1` and produce the unit monomial.
    pub fn var(rank: usize, s: i32, i: u32) -> Self {
        let mut m = Self::one(rank);
        if i >= 1 && (i as usize) <= rank {
            m.exps.insert(VarRef { row: s, color: i }, 1);
        }
        m
    }

    /// The pure torus character `a^w`.
    pub fn a_pow(w: TorusWeight) -> Self {
        Monomial { exps: BTreeMap::new(), aweight: w }
    }

    /// Builds a monomial from `(row, color, exponent)` triples with the zero
    /// weight; color-guarded and zero exponents dropped.
    pub fn from_exps(rank: usize, triples: &[(i32, u32, i64)]) -> Self {
        let mut m = Self::one(rank);
        for &(s, i, e) in triples {
            if e == 0 || i == 0 || (i as usize) > rank {
                continue;
            }
            let entry = m.exps.entry(VarRef { row: s, color: i }).or_insert(0);
            *entry += e;
            if *entry == 0 {
                m.exps.remove(&VarRef { row: s, color: i });
            }
        }
        m
    }

    /// The exponent of `Y_{s,i}` in this monomial (0 when absent).
    pub fn exponent(&self, s: i32, i: u32) -> i64 {
        self.exps.get(&VarRef { row: s, color: i }).copied().unwrap_or(0)
    }

    /// Iterates over `(VarRef, exponent)` pairs in canonical order.
    pub fn exps(&self) -> impl Iterator<Item = (&VarRef, &i64)> {
        self.exps.iter()
    }

    /// The torus character of the monomial.
    pub fn aweight(&self) -> &TorusWeight {
        &self.aweight
    }

    /// The rank this monomial lives in.
    pub fn rank(&self) -> usize {
        self.aweight.rank()
    }

    /// Whether this is the unit monomial with zero weight.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty() && self.aweight.is_zero()
    }

    /// Product of monomials: exponents and weights add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let entry = exps.entry(v).or_insert(0);
            *entry += e;
            if *entry == 0 {
                exps.remove(&v);
            }
        }
        Monomial { exps, aweight: self.aweight.add(&other.aweight) }
    }

    /// Integer power (negative allowed).
    pub fn pow(&self, n: i64) -> Monomial {
        let mut exps = BTreeMap::new();
        if n != 0 {
            for (&v, &e) in &self.exps {
                exps.insert(v, e * n);
            }
        }
        Monomial { exps, aweight: self.aweight.scale(n) }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    fn render_vars(&self, out: &mut String) {
        use core::fmt::Write;
        let mut first = true;
        // Numerator factors first, then denominator factors, each in
        // canonical (row, color) order.
        let ordered = self
            .exps
            .iter()
            .filter(|(_, &e)| e > 0)
            .chain(self.exps.iter().filter(|(_, &e)| e < 0));
        for (v, &e) in ordered {
            if !first {
                out.push('*');
            }
            first = false;
            let _ = write!(out, "{}", v);
            if e != 1 {
                let _ = write!(out, "^{}", e);
            }
        }
    }

    /// Renders the `Y`-part only (weight ignored); the unit renders as `1`.
    pub fn render_yparts(&self) -> String {
        if self.exps.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        self.render_vars(&mut s);
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if !self.aweight.is_zero() {
            s.push_str("a^{");
            s.push_str(&self.aweight.render());
            s.push('}');
            if !self.exps.is_empty() {
                s.push('*');
            }
        }
        if !self.exps.is_empty() {
            self.render_vars(&mut s);
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

/// Error raised by [`LaurentPoly::divide_exact`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DivideError {
    /// The denominator was the zero polynomial.
    DivisionByZero,
    /// A nonzero remainder survived: the quotient is not a Laurent
    /// polynomial over the integers.
    NotDivisible,
}

impl fmt::Display for DivideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivideError::DivisionByZero => write!(f, "division by zero polynomial"),
            DivideError::NotDivisible => write!(f, "not exactly divisible"),
        }
    }
}

/// An exact integer-coefficient Laurent polynomial in the `Y_{s,i}` with
/// torus characters; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one(rank: usize) -> Self {
        Self::from_monomial(Monomial::one(rank))
    }

    /// The constant integer polynomial.
    pub fn constant(rank: usize, c: i64) -> Self {
        Self::from_term(Monomial::one(rank), BigInt::from(c))
    }

    /// A single monomial with coefficient 1.
    pub fn from_monomial(m: Monomial) -> Self {
        Self::from_term(m, BigInt::one())
    }

    /// A single term.
    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let rank = m.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { rank, terms }
    }

    /// The variable `Y_{s,i}` as a polynomial.
    pub fn var(rank: usize, s: i32, i: u32) -> Self {
        Self::from_monomial(Monomial::var(rank, s, i))
    }

    /// The rank of the underlying weight lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(monomial, coefficient)` in canonical order: the
    /// support together with the coefficient map.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The coefficient of a monomial (0 when absent).
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum.
    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product: coefficientwise convolution; weights add per monomial.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = LaurentPoly::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Multiplication by a single monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Nonnegative power.
    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.rank);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Integer power: negative exponents require a single-term polynomial
    /// with coefficient `±1` (a unit of the Laurent ring).
    ///
    /// # Panics
    /// If a negative power of a non-unit is requested.
    pub fn pow_int(&self, n: i64) -> LaurentPoly {
        if n >= 0 {
            return self.pow(n as u32);
        }
        assert_eq!(self.terms.len(), 1, "negative power of a non-monomial");
        let (m, c) = self.terms.iter().next().unwrap();
        assert!(
            c.magnitude() == BigInt::one().magnitude(),
            "negative power of a non-unit coefficient"
        );
        let coeff = if c.is_negative() && n % 2 != 0 { -BigInt::one() } else { BigInt::one() };
        LaurentPoly::from_term(m.pow(n), coeff)
    }

    /// If the polynomial is nonzero and H-homogeneous, its common weight.
    pub fn homogeneous_weight(&self) -> Option<TorusWeight> {
        let mut it = self.terms.keys();
        let first = it.next()?.aweight().clone();
        for m in it {
            if *m.aweight() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Strips the common torus character `a^w`, returning the weight and the
    /// pure `Y`-polynomial; `None` if not H-homogeneous (or zero).
    pub fn split_aweight(&self) -> Option<(TorusWeight, LaurentPoly)> {
        let w = self.homogeneous_weight()?;
        let shift = Monomial::a_pow(w.neg());
        Some((w, self.mul_monomial(&shift)))
    }

    /// Exact division: returns `q` with `q·d = self`.
    ///
    /// Both operands are shifted by monomials (per-variable and per-weight-
    /// coordinate minima) into the ordinary polynomial ring, where leading
    /// terms under plain lex order on the full exponent vector are divided
    /// off; the quotient is shifted back.  A surviving remainder yields
    /// [`DivideError::NotDivisible`].
    pub fn divide_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, DivideError> {
        if d.is_zero() {
            return Err(DivideError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.rank));
        }
        debug_assert_eq!(self.rank, d.rank);
        // Collect the variable universe of both operands.
        let mut vars: Vec<VarRef> = Vec::new();
        for p in [self, d] {
            for m in p.terms.keys() {
                for (&v, _) in m.exps() {
                    if let Err(pos) = vars.binary_search(&v) {
                        vars.insert(pos, v);
                    }
                }
            }
        }
        let width = vars.len() + self.rank;
        let to_vec = |m: &Monomial| -> Vec<i64> {
            let mut out = vec![0i64; width];
            for (v, &e) in m.exps() {
                let pos = vars.binary_search(v).unwrap();
                out[pos] = e;
            }
            out[vars.len()..].copy_from_slice(&m.aweight().coeffs);
            out
        };
        let min_of = |p: &LaurentPoly| -> Vec<i64> {
            let mut min: Option<Vec<i64>> = None;
            for m in p.terms.keys() {
                let v = to_vec(m);
                match &mut min {
                    None => min = Some(v),
                    Some(acc) => {
                        for (a, b) in acc.iter_mut().zip(&v) {
                            if *b < *a {
                                *a = *b;
                            }
                        }
                    }
                }
            }
            min.unwrap()
        };
        let min_n = min_of(self);
        let min_d = min_of(d);
        let shifted = |p: &LaurentPoly, min: &[i64]| -> BTreeMap<Vec<i64>, BigInt> {
            p.terms
                .iter()
                .map(|(m, c)| {
                    let v = to_vec(m);
                    (v.iter().zip(min).map(|(a, b)| a - b).collect(), c.clone())
                })
                .collect()
        };
        let mut rem = shifted(self, &min_n);
        let dd = shifted(d, &min_d);
        let (lt_d, lc_d) = dd.iter().next_back().map(|(k, v)| (k.clone(), v.clone())).unwrap();
        let mut quot: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        while let Some((lt_r, lc_r)) = rem.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            let mut diff = vec![0i64; width];
            for (o, (a, b)) in diff.iter_mut().zip(lt_r.iter().zip(&lt_d)) {
                if a < b {
                    return Err(DivideError::NotDivisible);
                }
                *o = a - b;
            }
            if (&lc_r % &lc_d) != BigInt::zero() {
                return Err(DivideError::NotDivisible);
            }
            let qc = &lc_r / &lc_d;
            *quot.entry(diff.clone()).or_insert_with(BigInt::zero) += &qc;
            for (dk, dc) in &dd {
                let key: Vec<i64> = diff.iter().zip(dk).map(|(a, b)| a + b).collect();
                let entry = rem.entry(key).or_insert_with(BigInt::zero);
                *entry -= &qc * dc;
                if entry.is_zero() {
                    let key: Vec<i64> = diff.iter().zip(dk).map(|(a, b)| a + b).collect();
                    rem.remove(&key);
                }
            }
        }
        // Shift the quotient back by min_n - min_d.
        let mut out = LaurentPoly::zero(self.rank);
        for (key, c) in quot {
            if c.is_zero() {
                continue;
            }
            let mut exps = BTreeMap::new();
            for (pos, v) in vars.iter().enumerate() {
                let e = key[pos] + min_n[pos] - min_d[pos];
                if e != 0 {
                    exps.insert(*v, e);
                }
            }
            let coeffs: Vec<i64> = (0..self.rank)
                .map(|j| key[vars.len() + j] + min_n[vars.len() + j] - min_d[vars.len() + j])
                .collect();
            out.add_term(Monomial { exps, aweight: TorusWeight { coeffs } }, c);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let common = self.homogeneous_weight().filter(|w| !w.is_zero());
        let mut out = String::new();
        if let Some(w) = &common {
            use core::fmt::Write;
            let _ = write!(out, "a^{{{}}}*", w.render());
            if self.terms.len() > 1 {
                out.push('(');
            }
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.magnitude();
            let body = if common.is_some() {
                m.render_yparts()
            } else {
                use alloc::string::ToString;
                m.to_string()
            };
            if !mag.is_one() {
                use core::fmt::Write;
                let _ = write!(out, "{}", mag);
                if body != "1" {
                    out.push('*');
                    out.push_str(&body);
                }
            } else {
                out.push_str(&body);
            }
        }
        if common.is_some() && self.terms.len() > 1 {
            out.push(')');
        }
        // A single unit term under a common weight: `a^{w}*1` → `a^{w}`.
        if let Some(stripped) = out.strip_suffix("*1") {
            out.truncate(stripped.len());
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn y(s: i32, i: u32) -> LaurentPoly {
        LaurentPoly::var(2, s, i)
    }

    #[test]
    fn monomial_product() {
        // Y_{1,1} × Y_{2,1}^{-1} → Y_{1,1}·Y_{2,1}^{-1}
        let p = y(1, 1).mul(&LaurentPoly::from_monomial(Monomial::var(2, 2, 1).inv()));
        let expect =
            LaurentPoly::from_monomial(Monomial::from_exps(2, &[(1, 1, 1), (2, 1, -1)]));
        assert_eq!(p, expect);
    }

    #[test]
    fn difference_of_squares() {
        // (Y_{1,1} + 1) × (Y_{1,1} − 1) → Y_{1,1}² − 1
        let one = LaurentPoly::one(2);
        let p = y(1, 1).add(&one).mul(&y(1, 1).sub(&one));
        let expect = LaurentPoly::from_monomial(Monomial::from_exps(2, &[(1, 1, 2)]))
            .sub(&one);
        assert_eq!(p, expect);
    }

    #[test]
    fn aweight_additivity() {
        // a^{Λ1}Y_{1,1} × a^{Λ2}Y_{1,2} → a^{Λ1+Λ2}Y_{1,1}Y_{1,2}
        let a1 = Monomial::a_pow(TorusWeight::fundamental(2, 1));
        let a2 = Monomial::a_pow(TorusWeight::fundamental(2, 2));
        let p = LaurentPoly::from_monomial(Monomial::var(2, 1, 1).mul(&a1))
            .mul(&LaurentPoly::from_monomial(Monomial::var(2, 1, 2).mul(&a2)));
        let w = TorusWeight::fundamental(2, 1).add(&TorusWeight::fundamental(2, 2));
        let expect = LaurentPoly::from_monomial(
            Monomial::from_exps(2, &[(1, 1, 1), (1, 2, 1)]).mul(&Monomial::a_pow(w.clone())),
        );
        assert_eq!(p, expect);
        assert_eq!(p.homogeneous_weight(), Some(w));
    }

    #[test]
    fn divide_monomial_denominator() {
        // (Y_{1,1}Y_{2,1} + Y_{2,2}) ÷ Y_{2,1} → Y_{1,1} + Y_{2,2}Y_{2,1}^{-1}
        let n = LaurentPoly::from_monomial(Monomial::from_exps(2, &[(1, 1, 1), (2, 1, 1)]))
            .add(&y(2, 2));
        let q = n.divide_exact(&y(2, 1)).unwrap();
        let expect = y(1, 1).add(&LaurentPoly::from_monomial(Monomial::from_exps(
            2,
            &[(2, 2, 1), (2, 1, -1)],
        )));
        assert_eq!(q, expect);
    }

    #[test]
    fn divide_single_variable_factorization() {
        // (Y_{1,1}² − 1) ÷ (Y_{1,1} − 1) → Y_{1,1} + 1
        let one = LaurentPoly::one(2);
        let n = y(1, 1).mul(&y(1, 1)).sub(&one);
        let q = n.divide_exact(&y(1, 1).sub(&one)).unwrap();
        assert_eq!(q, y(1, 1).add(&one));
    }

    #[test]
    fn divide_perfect_square() {
        // (Y_{1,1}² + 2Y_{1,1}Y_{2,2} + Y_{2,2}²) ÷ (Y_{1,1}+Y_{2,2});
        // confirmed by multiplying the quotient back.
        let s = y(1, 1).add(&y(2, 2));
        let n = s.mul(&s);
        let q = n.divide_exact(&s).unwrap();
        assert_eq!(q, s);
        assert_eq!(q.mul(&s), n);
    }

    #[test]
    fn divide_not_divisible() {
        let n = y(1, 1).add(&LaurentPoly::one(2));
        assert_eq!(n.divide_exact(&y(2, 2).add(&LaurentPoly::one(2))), Err(DivideError::NotDivisible));
        assert_eq!(n.divide_exact(&LaurentPoly::zero(2)), Err(DivideError::DivisionByZero));
    }

    #[test]
    fn divide_roundtrip_randomized() {
        // For p = q·d built by multiplication, divide_exact(p, d) = q.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let mut rand_poly = |terms: u64| {
                let mut p = LaurentPoly::zero(2);
                for _ in 0..=terms {
                    let s = (next() % 3) as i32 + 1;
                    let i = (next() % 2) as u32 + 1;
                    let e = (next() % 5) as i64 - 2;
                    let c = (next() % 7) as i64 - 3;
                    let mut w = TorusWeight::zero(2);
                    w.coeffs[0] = (next() % 3) as i64 - 1;
                    p = p.add(&LaurentPoly::from_term(
                        Monomial::from_exps(2, &[(s, i, e)]).mul(&Monomial::a_pow(w)),
                        BigInt::from(c),
                    ));
                }
                p
            };
            let q = rand_poly(3);
            let d = rand_poly(3);
            if d.is_zero() {
                continue;
            }
            let p = q.mul(&d);
            assert_eq!(p.divide_exact(&d).unwrap(), q);
        }
    }

    #[test]
    fn support_examples() {
        // a^{Λ1}(Y_{1,1} + Y_{2,2}Y_{2,1}^{-1}): two monomials, coefficient 1,
        // aweight Λ1 on each.
        let a1 = Monomial::a_pow(TorusWeight::fundamental(2, 1));
        let p = LaurentPoly::from_monomial(Monomial::var(2, 1, 1).mul(&a1)).add(
            &LaurentPoly::from_monomial(
                Monomial::from_exps(2, &[(2, 2, 1), (2, 1, -1)]).mul(&a1),
            ),
        );
        assert_eq!(p.num_terms(), 2);
        for (m, c) in p.terms() {
            assert_eq!(*c, BigInt::one());
            assert_eq!(*m.aweight(), TorusWeight::fundamental(2, 1));
        }
        assert_eq!(LaurentPoly::zero(2).num_terms(), 0);
        let twice = LaurentPoly::from_term(Monomial::var(2, 1, 1), BigInt::from(2));
        let (m, c) = twice.terms().next().unwrap();
        assert_eq!(*c, BigInt::from(2));
        assert_eq!(*m, Monomial::var(2, 1, 1));
    }

    #[test]
    fn homogeneity_preserved_by_mul() {
        let a1 = Monomial::a_pow(TorusWeight::fundamental(2, 1));
        let p = LaurentPoly::from_monomial(Monomial::var(2, 1, 1).mul(&a1))
            .add(&LaurentPoly::from_monomial(Monomial::var(2, 2, 1).mul(&a1)));
        let q = p.mul(&p);
        assert_eq!(
            q.homogeneous_weight(),
            Some(TorusWeight::fundamental(2, 1).scale(2))
        );
    }

    #[test]
    fn rendering() {
        let a1 = Monomial::a_pow(TorusWeight::fundamental(2, 1));
        let p = LaurentPoly::from_monomial(Monomial::var(2, 1, 1).mul(&a1)).add(
            &LaurentPoly::from_monomial(
                Monomial::from_exps(2, &[(2, 2, 1), (2, 1, -1)]).mul(&a1),
            ),
        );
        assert_eq!(p.to_string(), "a^{L1}*(Y[1,1] + Y[2,2]*Y[2,1]^-1)");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(LaurentPoly::constant(2, -3).to_string(), "-3");
    }
}
