//! Brute-force model of one multidegree component: the free nonassociative
//! algebra modulo graded antisymmetry and the graded Jacobi identity, by
//! exact row reduction.
//!
//! Antisymmetry is applied node by node, so the spanning set is the set of
//! canonically oriented trees. Jacobi relations are imposed at every node of
//! every such tree.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::LieError;
use crate::lie::algebra::{BasisKey, Coeff};
use crate::lie::alphabet::GradedAlphabet;
use crate::lie::expr::BracketExpr;

pub const ORACLE_LIMIT: u32 = 8;

type Row = BTreeMap<usize, Coeff>;

/// Spanning trees, relation echelon form, and the quotient dimension.
#[derive(Debug, Clone)]
pub struct OracleComponent {
    alpha: GradedAlphabet,
    pub multidegree: Vec<u32>,
    trees: Vec<BracketExpr>,
    index: HashMap<BracketExpr, usize>,
    pivots: BTreeMap<usize, Row>,
    pub dimension: usize,
}

fn bideg(alpha: &GradedAlphabet, e: &BracketExpr) -> (u8, u8) {
    alpha.bidegree(&e.word())
}

/// Canonical orientation: children in increasing order, with the sign of
/// `xy = -ε(x,y) yx`; `None` when the tree vanishes (`xx` with `ε(x,x) = 1`).
fn orient(alpha: &GradedAlphabet, e: &BracketExpr) -> Option<(i64, BracketExpr)> {
    match e {
        BracketExpr::Letter(_) => Some((1, e.clone())),
        BracketExpr::Bracket(l, r) => {
            let (sl, l) = orient(alpha, l)?;
            let (sr, r) = orient(alpha, r)?;
            let s = sl * sr;
            match l.cmp(&r) {
                std::cmp::Ordering::Less => Some((s, BracketExpr::bracket(l, r))),
                std::cmp::Ordering::Greater => {
                    let eps = alpha.sign(bideg(alpha, &l), bideg(alpha, &r));
                    Some((-eps * s, BracketExpr::bracket(r, l)))
                }
                std::cmp::Ordering::Equal => {
                    let b = bideg(alpha, &l);
                    (alpha.sign(b, b) == -1).then(|| (s, BracketExpr::bracket(l, r)))
                }
            }
        }
    }
}

fn oriented_trees(alpha: &GradedAlphabet, md: &[u32], memo: &mut HashMap<Vec<u32>, Vec<BracketExpr>>) -> Vec<BracketExpr> {
    if let Some(t) = memo.get(md) {
        return t.clone();
    }
    let total: u32 = md.iter().sum();
    let mut out = Vec::new();
    if total == 1 {
        let l = md.iter().position(|&k| k == 1).expect("one letter");
        out.push(BracketExpr::Letter(l as u8));
    } else {
        for left in sub_multidegrees(md) {
            let right: Vec<u32> = md.iter().zip(&left).map(|(a, b)| a - b).collect();
            if left.iter().sum::<u32>() == 0 || right.iter().sum::<u32>() == 0 {
                continue;
            }
            let ls = oriented_trees(alpha, &left, memo);
            let rs = oriented_trees(alpha, &right, memo);
            for l in &ls {
                for r in &rs {
                    if l < r {
                        out.push(BracketExpr::bracket(l.clone(), r.clone()));
                    } else if l == r {
                        let b = bideg(alpha, l);
                        if alpha.sign(b, b) == -1 {
                            out.push(BracketExpr::bracket(l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    memo.insert(md.to_vec(), out.clone());
    out
}

fn sub_multidegrees(md: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &k in md {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Subtree at a path of child indices.
fn at<'e>(e: &'e BracketExpr, path: &[u8]) -> &'e BracketExpr {
    match (e, path.split_first()) {
        (_, None) => e,
        (BracketExpr::Bracket(l, r), Some((&c, rest))) => at(if c == 0 { l } else { r }, rest),
        (BracketExpr::Letter(_), Some(_)) => panic!("path runs past a leaf"),
    }
}

fn replace(e: &BracketExpr, path: &[u8], with: BracketExpr) -> BracketExpr {
    match (e, path.split_first()) {
        (_, None) => with,
        (BracketExpr::Bracket(l, r), Some((&c, rest))) => {
            if c == 0 {
                BracketExpr::bracket(replace(l, rest, with), (**r).clone())
            } else {
                BracketExpr::bracket((**l).clone(), replace(r, rest, with))
            }
        }
        (BracketExpr::Letter(_), Some(_)) => panic!("path runs past a leaf"),
    }
}

fn internal_paths(e: &BracketExpr, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if let BracketExpr::Bracket(l, r) = e {
        out.push(prefix.clone());
        prefix.push(0);
        internal_paths(l, prefix, out);
        prefix.pop();
        prefix.push(1);
        internal_paths(r, prefix, out);
        prefix.pop();
    }
}

/// Builds the oracle for one component (total degree at most 8).
pub fn oracle_component(alpha: &GradedAlphabet, multidegree: &[u32]) -> Result<OracleComponent, LieError> {
    let total: u32 = multidegree.iter().sum();
    if total > ORACLE_LIMIT {
        return Err(LieError::TooLarge(total, ORACLE_LIMIT));
    }
    if multidegree.len() != alpha.len() {
        return Err(LieError::BadAlphabet("multidegree length differs from alphabet size".into()));
    }
    let trees = if total == 0 {
        Vec::new()
    } else {
        oriented_trees(alpha, multidegree, &mut HashMap::new())
    };
    let index: HashMap<BracketExpr, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut oc = OracleComponent {
        alpha: alpha.clone(),
        multidegree: multidegree.to_vec(),
        trees,
        index,
        pivots: BTreeMap::new(),
        dimension: 0,
    };
    for t in oc.trees.clone() {
        let mut paths = Vec::new();
        internal_paths(&t, &mut Vec::new(), &mut paths);
        for p in paths {
            let BracketExpr::Bracket(c1, c2) = at(&t, &p) else { unreachable!() };
            for (u, vw) in [(c1, c2), (c2, c1)] {
                let BracketExpr::Bracket(v, w) = &**vw else { continue };
                let (u, v, w) = ((**u).clone(), (**v).clone(), (**w).clone());
                let (bu, bv, bw) = (bideg(alpha, &u), bideg(alpha, &v), bideg(alpha, &w));
                let terms = [
                    (alpha.sign(bu, bw), u.clone(), BracketExpr::bracket(v.clone(), w.clone())),
                    (alpha.sign(bw, bv), w.clone(), BracketExpr::bracket(u.clone(), v.clone())),
                    (alpha.sign(bv, bu), v, BracketExpr::bracket(w, u)),
                ];
                let mut row = Row::new();
                for (s, x, yz) in terms {
                    let tree = replace(&t, &p, BracketExpr::bracket(x, yz));
                    if let Some((sign, idx)) = oc.locate(&tree) {
                        *row.entry(idx).or_insert_with(Coeff::zero) += Coeff::from_integer((s * sign).into());
                    }
                }
                row.retain(|_, c| !c.is_zero());
                oc.insert_relation(row);
            }
        }
    }
    oc.dimension = oc.trees.len() - oc.pivots.len();
    Ok(oc)
}

impl OracleComponent {
    pub fn spanning_set_size(&self) -> usize {
        self.trees.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn locate(&self, e: &BracketExpr) -> Option<(i64, usize)> {
        let (s, t) = orient(&self.alpha, e)?;
        Some((s, *self.index.get(&t).expect("oriented tree of this multidegree")))
    }

    fn reduce(&self, mut row: Row) -> Row {
        let mut out = Row::new();
        while let Some((c, x)) = row.pop_first() {
            match self.pivots.get(&c) {
                None => {
                    out.insert(c, x);
                }
                Some(p) => {
                    for (&d, y) in p.iter().skip(1) {
                        let slot = row.entry(d).or_insert_with(Coeff::zero);
                        *slot -= &x * y;
                        if slot.is_zero() {
                            row.remove(&d);
                        }
                    }
                }
            }
        }
        out
    }

    fn insert_relation(&mut self, row: Row) {
        let mut row = self.reduce_against_pivots(row);
        let Some((&c, lead)) = row.iter().next() else { return };
        let inv = Coeff::one() / lead;
        for x in row.values_mut() {
            *x *= &inv;
        }
        self.pivots.insert(c, row);
    }

    /// Eliminates pivot columns only until the leading column is free.
    fn reduce_against_pivots(&self, mut row: Row) -> Row {
        while let Some((&c, x)) = row.iter().next() {
            let Some(p) = self.pivots.get(&c) else { break };
            let x = x.clone();
            for (&d, y) in p {
                let slot = row.entry(d).or_insert_with(Coeff::zero);
                *slot -= &x * y;
                if slot.is_zero() {
                    row.remove(&d);
                }
            }
        }
        row
    }

    /// Normal form of a combination of bracket trees modulo the relations
    /// (brackets read as products).
    pub fn residual(&self, combo: &[(Coeff, BracketExpr)]) -> Result<Row, LieError> {
        let mut row = Row::new();
        for (c, e) in combo {
            let md = self.alpha.multidegree(&e.word());
            if md != self.multidegree {
                return Err(LieError::MixedMultidegree(self.multidegree.clone(), md));
            }
            if let Some((s, i)) = self.locate(e) {
                *row.entry(i).or_insert_with(Coeff::zero) += c * Coeff::from_integer(s.into());
            }
        }
        row.retain(|_, c| !c.is_zero());
        Ok(self.reduce(row))
    }

    /// Whether two combinations define the same element of the component.
    pub fn same_element(&self, a: &[(Coeff, BracketExpr)], b: &[(Coeff, BracketExpr)]) -> Result<bool, LieError> {
        let mut diff: Vec<(Coeff, BracketExpr)> = a.to_vec();
        diff.extend(b.iter().map(|(c, e)| (-c.clone(), e.clone())));
        Ok(self.residual(&diff)?.is_empty())
    }

    /// The combination of basis trees represented by `keys` with coefficients.
    pub fn from_basis(terms: &[(Coeff, BasisKey)]) -> Vec<(Coeff, BracketExpr)> {
        terms.iter().map(|(c, k)| (c.clone(), k.to_expr())).collect()
    }

    /// Rank of the images of the given trees in the quotient.
    pub fn rank_of(&self, exprs: &[BracketExpr]) -> Result<usize, LieError> {
        let mut echelon = OracleComponent {
            pivots: BTreeMap::new(),
            ..self.clone()
        };
        let mut count = 0;
        for e in exprs {
            let r = self.residual(&[(Coeff::one(), e.clone())])?;
            let r = echelon.reduce(r);
            if !r.is_empty() {
                count += 1;
                echelon.insert_relation(r);
            }
        }
        Ok(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::{multidegrees, FreeLie};

    #[test]
    fn single_odd_letter() {
        let a = GradedAlphabet::parse("a:odd,b:even").unwrap();
        assert_eq!(oracle_component(&a, &[2, 0]).unwrap().dimension, 1);
        assert_eq!(oracle_component(&a, &[3, 0]).unwrap().dimension, 0);
        assert_eq!(oracle_component(&a, &[0, 2]).unwrap().dimension, 0);
    }

    #[test]
    fn multilinear_odd() {
        for n in 1..=5 {
            let a = GradedAlphabet::odd_letters(n);
            let fact: usize = (1..n).product();
            assert_eq!(oracle_component(&a, &vec![1; n]).unwrap().dimension, fact);
        }
    }

    #[test]
    fn matches_lyndon_count_small() {
        let a = GradedAlphabet::parse("a:odd,b:even").unwrap();
        let lie = FreeLie::new(a.clone());
        for total in 1..=5 {
            for md in multidegrees(2, total) {
                assert_eq!(oracle_component(&a, &md).unwrap().dimension, lie.dimension(&md), "{md:?}");
            }
        }
    }

    #[test]
    fn too_large() {
        let a = GradedAlphabet::parse("a:odd,b:even").unwrap();
        assert!(matches!(oracle_component(&a, &[5, 4]), Err(LieError::TooLarge(9, 8))));
    }
}
