//! The spaces V_{l,g} as multidegree components of the free Lie superalgebra on
//! `a` (odd) and `b` (even), and the differential substituting `b ↦ [a,a]`.
//!
//! `b` stands for a bracketed pair of odd letters, so besides its parity it
//! carries one unit of edge weight; brackets commute with the sign
//! `(-1)^(|x||y| + e(x)e(y))`. Coordinates are taken in the oriented basis
//! `B°(w) = (-1)^inv(w) B(w)`, `inv(w)` the number of pairs `b … a` in `w`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::SpectralError;
use crate::lie::{BasisKey, BracketExpr, Coeff, FreeLie, GradedAlphabet, LieVector, Word};

pub const A: u8 = 0;
pub const B: u8 = 1;
pub const MAX_GENUS: u32 = 12;

pub fn edge_alphabet() -> GradedAlphabet {
    GradedAlphabet::with_weights(&[('a', true, false), ('b', false, true)]).expect("two letters")
}

/// `(-1)^inv(w)` with `inv(w) = #{i < j : w_i = b, w_j = a}`.
pub fn orientation(w: &[u8]) -> i64 {
    let mut bs = 0;
    let mut inv = 0;
    for &l in w {
        if l == B {
            bs += 1;
        } else {
            inv += bs;
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn key_orientation(k: &BasisKey) -> Coeff {
    Coeff::from_integer(orientation(&k.leading_word()).into())
}

/// An element of V_{l,g}, coordinates in the oriented basis.
#[derive(Debug, Clone, PartialEq)]
pub struct VSpaceElement {
    pub g: u32,
    pub l: u32,
    pub vector: LieVector,
}

impl VSpaceElement {
    pub fn format(&self) -> String {
        self.vector.format(&edge_alphabet())
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }
}

/// `(2g - 2l + 1, l)`.
pub fn multidegree(l: u32, g: u32) -> [u32; 2] {
    [2 * g - 2 * l + 1, l]
}

fn check_lg(l: u32, g: u32) -> Result<(), SpectralError> {
    if !(1..=MAX_GENUS).contains(&g) {
        return Err(SpectralError::OutOfRange {
            what: "g",
            value: g as i64,
            range: "1..=12",
        });
    }
    if l > g {
        return Err(SpectralError::OutOfRange {
            what: "l",
            value: l as i64,
            range: "0..=g",
        });
    }
    Ok(())
}

/// Expansion of d₁(ω_g) against the two leading keys.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingTerms {
    pub g: u32,
    /// Coefficient of `a³b^(g-1)`.
    pub a3b: String,
    /// Coefficient of `a²bab^(g-2)`.
    pub a2bab: String,
    pub expected: (i64, i64),
    /// All other keys are greater than `a²bab^(g-2)`.
    pub remainder_greater: bool,
    pub integral: bool,
    pub expansion: String,
    pub holds: bool,
}

/// The free Lie superalgebra on the edge alphabet with d₁.
#[derive(Debug, Clone)]
pub struct LieComplex {
    lie: FreeLie,
}

impl Default for LieComplex {
    fn default() -> Self {
        Self::new()
    }
}

impl LieComplex {
    pub fn new() -> Self {
        LieComplex {
            lie: FreeLie::new(edge_alphabet()),
        }
    }

    pub fn lie(&self) -> &FreeLie {
        &self.lie
    }

    pub fn basis(&self, l: u32, g: u32) -> Result<Vec<BasisKey>, SpectralError> {
        check_lg(l, g)?;
        Ok(self.lie.basis(&multidegree(l, g)))
    }

    pub fn dimension(&self, l: u32, g: u32) -> Result<usize, SpectralError> {
        Ok(self.basis(l, g)?.len())
    }

    /// Oriented basis vector `B°(key)` of V_{l,g}.
    pub fn basis_element(&self, l: u32, g: u32, key: BasisKey) -> VSpaceElement {
        VSpaceElement {
            g,
            l,
            vector: LieVector::basis(key),
        }
    }

    /// ω_g = B(ab^g), spanning V_{g,g}.
    pub fn omega(&self, g: u32) -> Result<VSpaceElement, SpectralError> {
        if g < 2 {
            return Err(SpectralError::OutOfRange {
                what: "g",
                value: g as i64,
                range: "2..=12",
            });
        }
        check_lg(g, g)?;
        let mut w: Word = vec![A];
        w.extend(std::iter::repeat_n(B, g as usize));
        Ok(self.basis_element(g, g, BasisKey::Lyndon(w)))
    }

    /// Substitutes each `b` of each basis term by `[a,a]`, the i-th
    /// occurrence from the left with sign `(-1)^(i-1)`.
    pub fn d1(&self, x: &VSpaceElement) -> Result<VSpaceElement, SpectralError> {
        if x.l == 0 {
            return Err(SpectralError::LevelZero);
        }
        check_lg(x.l, x.g)?;
        let aa = BracketExpr::bracket(BracketExpr::Letter(A), BracketExpr::Letter(A));
        let mut terms: Vec<(Coeff, BracketExpr)> = Vec::new();
        for (key, c) in x.vector.terms() {
            let c = c * key_orientation(key);
            let e = key.to_expr();
            let word = e.word();
            let mut sign = Coeff::one();
            for (pos, &letter) in word.iter().enumerate() {
                if letter == B {
                    terms.push((&c * &sign, e.substitute_leaf(pos, &aa)));
                    sign = -sign;
                }
            }
        }
        let plain = if terms.is_empty() {
            LieVector::zero()
        } else {
            self.lie.normalize_combination(&terms)?
        };
        let mut vector = LieVector::zero();
        for (k, c) in plain.terms() {
            vector.add_term(k.clone(), c * key_orientation(k));
        }
        Ok(VSpaceElement {
            g: x.g,
            l: x.l - 1,
            vector,
        })
    }

    /// Whether d₁∘d₁ vanishes on every basis vector of V_{l,g}.
    pub fn d1_squared_vanishes(&self, l: u32, g: u32) -> Result<bool, SpectralError> {
        if l < 2 {
            return Ok(true);
        }
        for key in self.basis(l, g)? {
            let x = self.basis_element(l, g, key);
            if !self.d1(&self.d1(&x)?)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks the leading part of d₁(ω_g): coefficients `(2, g-2)` on
    /// `a³b^(g-1)`, `a²bab^(g-2)` for even g and `(0, g-1)` for odd g, with
    /// every other key greater than `a²bab^(g-2)`.
    pub fn verify_leading_terms(&self, g: u32) -> Result<LeadingTerms, SpectralError> {
        if !(2..=10).contains(&g) {
            return Err(SpectralError::OutOfRange {
                what: "g",
                value: g as i64,
                range: "2..=10",
            });
        }
        let d = self.d1(&self.omega(g)?)?;
        let gu = g as usize;
        let k1 = BasisKey::Lyndon([vec![A; 3], vec![B; gu - 1]].concat());
        let k2 = BasisKey::Lyndon([vec![A, A, B, A], vec![B; gu - 2]].concat());
        let (c1, c2) = (d.vector.coeff(&k1), d.vector.coeff(&k2));
        let expected = if g % 2 == 0 { (2, g as i64 - 2) } else { (0, g as i64 - 1) };
        let remainder_greater = d.vector.terms().all(|(k, _)| *k == k1 || *k == k2 || *k > k2);
        let integral = d.vector.all_integral();
        let holds = c1 == Coeff::from_integer(expected.0.into())
            && c2 == Coeff::from_integer(expected.1.into())
            && remainder_greater
            && integral;
        Ok(LeadingTerms {
            g,
            a3b: c1.to_string(),
            a2bab: c2.to_string(),
            expected,
            remainder_greater,
            integral,
            expansion: d.format(),
            holds,
        })
    }
}

/// Coefficients of `x` as `(word, coefficient)` strings.
pub fn term_list(x: &VSpaceElement) -> Vec<(String, String)> {
    let a = edge_alphabet();
    x.vector
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.show(&a), c.to_string()))
        .collect()
}
