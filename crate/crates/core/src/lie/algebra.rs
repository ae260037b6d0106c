//! Lyndon-basis normal forms computed through the embedding of the free Lie
//! superalgebra into the free associative algebra.
//!
//! `[x, y] = xy - ε(x,y) yx`. The expansion of `B(w)` has smallest word `w`
//! with coefficient 1 and the expansion of `[B(w), B(w)]` has smallest word
//! `ww` with coefficient 2, so an element is read off in the basis by
//! repeatedly cancelling its smallest word.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LieError;
use crate::lie::alphabet::{is_lyndon, lyndon_words, standard_factorization, GradedAlphabet, Word};
use crate::lie::expr::{standard_bracketing, BracketExpr};

/// `B(w)` for a Lyndon word, or `[B(w), B(w)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisKey {
    Lyndon(Word),
    Square(Word),
}

impl BasisKey {
    /// Smallest word of the expansion: `w` or `ww`.
    pub fn leading_word(&self) -> Word {
        match self {
            BasisKey::Lyndon(w) => w.clone(),
            BasisKey::Square(w) => [w.as_slice(), w.as_slice()].concat(),
        }
    }

    pub fn show(&self, alpha: &GradedAlphabet) -> String {
        match self {
            BasisKey::Lyndon(w) => alpha.show(w),
            BasisKey::Square(w) => format!("({})^[2]", alpha.show(w)),
        }
    }

    pub fn to_expr(&self) -> BracketExpr {
        match self {
            BasisKey::Lyndon(w) => standard_bracketing(w).expect("Lyndon key"),
            BasisKey::Square(w) => {
                let b = standard_bracketing(w).expect("Lyndon key");
                BracketExpr::bracket(b.clone(), b)
            }
        }
    }
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |k: &BasisKey| matches!(k, BasisKey::Square(_)) as u8;
        self.leading_word()
            .cmp(&other.leading_word())
            .then(rank(self).cmp(&rank(other)))
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Coeff = BigRational;

/// Sparse exact combination of basis elements, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieVector {
    terms: BTreeMap<BasisKey, Coeff>,
}

impl LieVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: BasisKey) -> Self {
        let mut v = Self::zero();
        v.terms.insert(key, Coeff::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &BasisKey) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: BasisKey, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &LieVector, c: &Coeff) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Coeff) -> LieVector {
        let mut v = LieVector::zero();
        v.add_scaled(self, c);
        v
    }

    /// Letter counts shared by all keys, `None` for the zero vector.
    pub fn multidegree(&self, alpha: &GradedAlphabet) -> Option<Vec<u32>> {
        self.terms.keys().next().map(|k| alpha.multidegree(&k.leading_word()))
    }

    pub fn all_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `c·w` terms joined by spaces, squares as `(w)^[2]`; `0` when empty.
    pub fn format(&self, alpha: &GradedAlphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| format!("{}·{}", c, k.show(alpha)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Inverse of [`LieVector::format`].
    pub fn parse(s: &str, alpha: &GradedAlphabet) -> Result<Self, LieError> {
        let mut v = LieVector::zero();
        let s = s.trim();
        if s == "0" {
            return Ok(v);
        }
        for (i, term) in s.split_whitespace().enumerate() {
            let bad = |msg: &str| LieError::Parse { pos: i, msg: format!("term '{term}': {msg}") };
            let (c, w) = term.split_once('·').ok_or_else(|| bad("expected c·w"))?;
            let c: Coeff = c.trim_start_matches('+').parse().map_err(|_| bad("bad coefficient"))?;
            let key = match w.strip_prefix('(').and_then(|x| x.strip_suffix(")^[2]")) {
                Some(inner) => BasisKey::Square(alpha.parse_word(inner)?),
                None => BasisKey::Lyndon(alpha.parse_word(w)?),
            };
            match &key {
                BasisKey::Lyndon(w) | BasisKey::Square(w) if !is_lyndon(w) => {
                    return Err(LieError::NotLyndon(alpha.show(w)))
                }
                _ => {}
            }
            v.add_term(key, c);
        }
        Ok(v)
    }
}

/// Integer combination of words.
pub type Poly = BTreeMap<Word, i64>;

pub fn poly_add(acc: &mut Poly, p: &Poly, scale: i64) {
    for (w, &c) in p {
        let slot = acc.entry(w.clone()).or_insert(0);
        *slot += scale * c;
        if *slot == 0 {
            acc.remove(w);
        }
    }
}

fn poly_product(p: &Poly, q: &Poly, scale: i64, acc: &mut Poly) {
    for (u, &a) in p {
        for (v, &b) in q {
            let mut w = Vec::with_capacity(u.len() + v.len());
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            let slot = acc.entry(w).or_insert(0);
            *slot += scale * a * b;
        }
    }
    acc.retain(|_, c| *c != 0);
}

/// Free Lie (super)algebra on a graded alphabet, with a shared cache of
/// basis expansions.
#[derive(Debug)]
pub struct FreeLie {
    alpha: GradedAlphabet,
    cache: Mutex<HashMap<Word, Arc<Poly>>>,
}

impl Clone for FreeLie {
    fn clone(&self) -> Self {
        FreeLie::new(self.alpha.clone())
    }
}

impl FreeLie {
    pub fn new(alpha: GradedAlphabet) -> Self {
        FreeLie {
            alpha,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alpha
    }

    fn bracket_polys(&self, p: &Poly, q: &Poly, bp: (u8, u8), bq: (u8, u8)) -> Poly {
        let mut acc = Poly::new();
        poly_product(p, q, 1, &mut acc);
        poly_product(q, p, -self.alpha.sign(bp, bq), &mut acc);
        acc
    }

    /// Associative expansion of `B(w)`.
    pub fn expand_lyndon(&self, w: &[u8]) -> Arc<Poly> {
        if let Some(p) = self.cache.lock().expect("cache lock").get(w) {
            return p.clone();
        }
        let p = if w.len() == 1 {
            Poly::from([(w.to_vec(), 1)])
        } else {
            let (u, v) = standard_factorization(w).expect("expand_lyndon needs a Lyndon word");
            let (pu, pv) = (self.expand_lyndon(u), self.expand_lyndon(v));
            self.bracket_polys(&pu, &pv, self.alpha.bidegree(u), self.alpha.bidegree(v))
        };
        let p = Arc::new(p);
        self.cache
            .lock()
            .expect("cache lock")
            .entry(w.to_vec())
            .or_insert(p)
            .clone()
    }

    pub fn expand_key(&self, key: &BasisKey) -> Arc<Poly> {
        match key {
            BasisKey::Lyndon(w) => self.expand_lyndon(w),
            BasisKey::Square(w) => {
                let p = self.expand_lyndon(w);
                let b = self.alpha.bidegree(w);
                Arc::new(self.bracket_polys(&p, &p, b, b))
            }
        }
    }

    pub fn expand_expr(&self, e: &BracketExpr) -> Poly {
        match e {
            BracketExpr::Letter(l) => Poly::from([(vec![*l], 1)]),
            BracketExpr::Bracket(a, b) => {
                let (pa, pb) = (self.expand_expr(a), self.expand_expr(b));
                self.bracket_polys(&pa, &pb, self.alpha.bidegree(&a.word()), self.alpha.bidegree(&b.word()))
            }
        }
    }

    /// Basis key whose expansion starts with `m`.
    fn key_for(&self, m: &[u8]) -> Option<BasisKey> {
        if is_lyndon(m) {
            return Some(BasisKey::Lyndon(m.to_vec()));
        }
        let half = m.len() / 2;
        if m.len() % 2 == 0 && m[..half] == m[half..] && is_lyndon(&m[..half]) {
            let w = m[..half].to_vec();
            if self.alpha.squares_survive(self.alpha.bidegree(&w)) {
                return Some(BasisKey::Square(w));
            }
        }
        None
    }

    /// Reads an associative Lie element off in the Lyndon basis.
    pub fn reduce(&self, p: &Poly) -> Result<LieVector, LieError> {
        let mut rest: BTreeMap<Word, Coeff> = p
            .iter()
            .map(|(w, &c)| (w.clone(), Coeff::from_integer(BigInt::from(c))))
            .collect();
        self.reduce_rational(&mut rest)
    }

    fn reduce_rational(&self, rest: &mut BTreeMap<Word, Coeff>) -> Result<LieVector, LieError> {
        let mut out = LieVector::zero();
        while let Some((m, c)) = rest.pop_first() {
            if c.is_zero() {
                continue;
            }
            let key = self.key_for(&m).ok_or_else(|| LieError::NotLie(self.alpha.show(&m)))?;
            let expansion = self.expand_key(&key);
            let lead = expansion[&m];
            let q = &c / Coeff::from_integer(BigInt::from(lead));
            for (w, &x) in expansion.iter() {
                if *w == m {
                    continue;
                }
                let slot = rest.entry(w.clone()).or_insert_with(Coeff::zero);
                *slot -= &q * Coeff::from_integer(BigInt::from(x));
                if slot.is_zero() {
                    rest.remove(w);
                }
            }
            out.add_term(key, q);
        }
        Ok(out)
    }

    pub fn normalize(&self, e: &BracketExpr) -> Result<LieVector, LieError> {
        self.reduce(&self.expand_expr(e))
    }

    /// Normal form of a homogeneous rational combination of expressions.
    pub fn normalize_combination(&self, terms: &[(Coeff, BracketExpr)]) -> Result<LieVector, LieError> {
        let mut md: Option<Vec<u32>> = None;
        let mut rest: BTreeMap<Word, Coeff> = BTreeMap::new();
        for (c, e) in terms {
            let d = self.alpha.multidegree(&e.word());
            match &md {
                Some(m) if *m != d => return Err(LieError::MixedMultidegree(m.clone(), d)),
                _ => md = Some(d),
            }
            for (w, x) in self.expand_expr(e) {
                let slot = rest.entry(w.clone()).or_insert_with(Coeff::zero);
                *slot += c * Coeff::from_integer(BigInt::from(x));
                if slot.is_zero() {
                    rest.remove(&w);
                }
            }
        }
        self.reduce_rational(&mut rest)
    }

    fn to_rational_poly(&self, v: &LieVector) -> BTreeMap<Word, Coeff> {
        let mut out: BTreeMap<Word, Coeff> = BTreeMap::new();
        for (k, c) in v.terms() {
            for (w, &x) in self.expand_key(k).iter() {
                *out.entry(w.clone()).or_insert_with(Coeff::zero) += c * Coeff::from_integer(BigInt::from(x));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn bracket(&self, x: &LieVector, y: &LieVector) -> Result<LieVector, LieError> {
        let (Some(mx), Some(my)) = (x.multidegree(&self.alpha), y.multidegree(&self.alpha)) else {
            return Ok(LieVector::zero());
        };
        let (bx, by) = (
            self.alpha.bidegree_of_multidegree(&mx),
            self.alpha.bidegree_of_multidegree(&my),
        );
        let (px, py) = (self.to_rational_poly(x), self.to_rational_poly(y));
        let sign = Coeff::from_integer(BigInt::from(-self.alpha.sign(bx, by)));
        let mut acc: BTreeMap<Word, Coeff> = BTreeMap::new();
        for (s, (p, q)) in [(Coeff::one(), (&px, &py)), (sign, (&py, &px))] {
            for (u, a) in p {
                for (v, b) in q {
                    let w = [u.as_slice(), v.as_slice()].concat();
                    *acc.entry(w).or_insert_with(Coeff::zero) += &s * a * b;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        self.reduce_rational(&mut acc)
    }

    /// Basis keys of a multidegree component, in key order.
    pub fn basis(&self, multidegree: &[u32]) -> Vec<BasisKey> {
        let mut keys: Vec<BasisKey> = lyndon_words(&self.alpha, multidegree)
            .into_iter()
            .map(BasisKey::Lyndon)
            .collect();
        if multidegree.iter().all(|&k| k % 2 == 0) && multidegree.iter().any(|&k| k > 0) {
            let half: Vec<u32> = multidegree.iter().map(|&k| k / 2).collect();
            if self.alpha.squares_survive(self.alpha.bidegree_of_multidegree(&half)) {
                keys.extend(lyndon_words(&self.alpha, &half).into_iter().map(BasisKey::Square));
            }
        }
        keys.sort();
        keys
    }

    pub fn dimension(&self, multidegree: &[u32]) -> usize {
        self.basis(multidegree).len()
    }
}

/// Multidegrees with the given total over `k` letters, lexicographic.
pub fn multidegrees(k: usize, total: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in multidegrees(k - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(c: &Coeff) -> i32 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> FreeLie {
        FreeLie::new(GradedAlphabet::parse("a:odd,b:even").unwrap())
    }

    fn q(n: i64) -> Coeff {
        Coeff::from_integer(n.into())
    }

    fn norm(l: &FreeLie, s: &str) -> String {
        let e = BracketExpr::parse(s, l.alphabet()).unwrap();
        l.normalize(&e).unwrap().format(l.alphabet())
    }

    #[test]
    fn small_normal_forms() {
        let l = ab();
        assert_eq!(norm(&l, "[b,a]"), "-1·ab");
        assert_eq!(norm(&l, "[a,[a,a]]"), "0");
        assert_eq!(norm(&l, "[[a,a],[a,b]]"), "2·aaab");
        assert_eq!(norm(&l, "[a,a]"), "1·(a)^[2]");
        assert_eq!(norm(&l, "[b,b]"), "0");
        assert_eq!(norm(&l, "[[a,b],[a,b]]"), "1·(ab)^[2]");
    }

    #[test]
    fn basis_elements_are_fixed() {
        let l = ab();
        for md in [[3, 2], [2, 3], [4, 2], [2, 2]] {
            for k in l.basis(&md) {
                assert_eq!(l.normalize(&k.to_expr()).unwrap(), LieVector::basis(k.clone()));
            }
        }
    }

    #[test]
    fn dimensions_of_small_components() {
        let l = ab();
        for g in 1..8 {
            assert_eq!(l.dimension(&[1, g]), 1);
        }
        assert_eq!(l.dimension(&[2, 0]), 1);
        assert_eq!(l.dimension(&[3, 0]), 0);
        for n in 1..=6 {
            let odd = FreeLie::new(GradedAlphabet::odd_letters(n));
            let fact: usize = (1..n).product();
            assert_eq!(odd.dimension(&vec![1; n]), fact);
        }
    }

    #[test]
    fn triangularity_example() {
        let l = ab();
        let a = l.alphabet();
        let key = |s: &str| BasisKey::Lyndon(a.parse_word(s).unwrap());
        let r = l
            .bracket(&LieVector::basis(key("aab")), &LieVector::basis(key("ab")))
            .unwrap();
        assert_eq!(r.coeff(&key("aabab")), q(1));
        assert!(r.terms().all(|(k, _)| *k >= key("aabab")));
        assert_eq!(
            l.bracket(&LieVector::basis(key("a")), &LieVector::basis(key("b"))).unwrap(),
            LieVector::basis(key("ab"))
        );
        let odd = LieVector::basis(key("ab"));
        let sq = l.bracket(&LieVector::basis(key("aab")), &LieVector::basis(key("aab"))).unwrap();
        assert!(sq.is_zero());
        assert!(!l.bracket(&odd, &odd).unwrap().is_zero());
    }

    #[test]
    fn mixed_multidegree_rejected() {
        let l = ab();
        let a = l.alphabet();
        let e1 = BracketExpr::parse("[a,b]", a).unwrap();
        let e2 = BracketExpr::parse("[a,a]", a).unwrap();
        assert!(matches!(
            l.normalize_combination(&[(q(1), e1), (q(1), e2)]),
            Err(LieError::MixedMultidegree(..))
        ));
    }

    #[test]
    fn text_round_trip() {
        let l = ab();
        let a = l.alphabet();
        let v = l
            .normalize_combination(&[
                (q(3), BracketExpr::parse("[[a,a],[a,b]]", a).unwrap()),
                (Coeff::new(1.into(), 2.into()), BracketExpr::parse("[a,[a,[a,b]]]", a).unwrap()),
            ])
            .unwrap();
        let text = v.format(a);
        assert_eq!(LieVector::parse(&text, a).unwrap(), v);
        assert_eq!(LieVector::parse("0", a).unwrap(), LieVector::zero());
    }

    #[test]
    fn multidegree_listing() {
        assert_eq!(multidegrees(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(multidegrees(3, 4).len(), 15);
    }
}
