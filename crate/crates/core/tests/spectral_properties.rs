use hyperstrata::lie::{oracle_component, BasisKey, BracketExpr, Coeff, OracleComponent};
use hyperstrata::spectral::{
    betti_m0n, compact_betti_m0n, e1_table, edge_alphabet, f1_table, multidegree, orientation, LieComplex,
};

const A: u8 = 0;
const B: u8 = 1;

fn int(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// Plain coordinates of an element stored in the oriented basis.
fn plain(x: &hyperstrata::spectral::VSpaceElement) -> Vec<(Coeff, BracketExpr)> {
    let terms: Vec<(Coeff, BasisKey)> = x
        .vector
        .terms()
        .map(|(k, c)| (c * int(orientation(&k.leading_word())), k.clone()))
        .collect();
    OracleComponent::from_basis(&terms)
}

/// d1 straight from its definition: replace the i-th `b` by `[a,a]` with sign
/// `(-1)^(i-1)`, on the bracket tree of each basis element.
fn d1_by_substitution(x: &hyperstrata::spectral::VSpaceElement) -> Vec<(Coeff, BracketExpr)> {
    let aa = BracketExpr::bracket(BracketExpr::Letter(A), BracketExpr::Letter(A));
    let mut out = Vec::new();
    for (c, e) in plain(x) {
        let mut sign = 1;
        for (pos, &l) in e.word().iter().enumerate() {
            if l == B {
                out.push((c.clone() * int(sign), e.substitute_leaf(pos, &aa)));
                sign = -sign;
            }
        }
    }
    out
}

#[test]
fn d1_agrees_with_oracle_reduction() {
    let cx = LieComplex::new();
    let alpha = edge_alphabet();
    for g in 2..=4u32 {
        for l in 2..=g {
            let target = [2 * g - 2 * l + 3, l - 1];
            if target.iter().sum::<u32>() > 7 {
                continue;
            }
            let oracle = oracle_component(&alpha, &target).unwrap();
            for key in cx.basis(l, g).unwrap() {
                let x = cx.basis_element(l, g, key.clone());
                let d = cx.d1(&x).unwrap();
                assert_eq!((d.l, d.g), (l - 1, g));
                assert!(
                    oracle.same_element(&d1_by_substitution(&x), &plain(&d)).unwrap(),
                    "V_{{{l},{g}}} {}",
                    key.show(&alpha)
                );
            }
        }
    }
}

#[test]
fn component_dimensions_match_oracle() {
    let cx = LieComplex::new();
    let alpha = edge_alphabet();
    for g in 1..=3u32 {
        for l in 0..=g {
            let md = multidegree(l, g);
            let oracle = oracle_component(&alpha, &md).unwrap();
            assert_eq!(cx.dimension(l, g).unwrap(), oracle.dimension, "V_{{{l},{g}}}");
        }
    }
    for g in 2..=10 {
        assert_eq!(cx.dimension(g, g).unwrap(), 1);
    }
}

#[test]
fn d1_lands_in_the_right_multidegree() {
    let cx = LieComplex::new();
    let alpha = edge_alphabet();
    for g in 2..=6u32 {
        for l in 1..=g {
            for key in cx.basis(l, g).unwrap() {
                let d = cx.d1(&cx.basis_element(l, g, key)).unwrap();
                if let Some(md) = d.vector.multidegree(&alpha) {
                    assert_eq!(md, vec![2 * g - 2 * l + 3, l - 1]);
                }
                assert!(d.vector.all_integral());
            }
        }
    }
}

#[test]
fn open_moduli_euler_characteristic() {
    for n in 3..=12usize {
        let b = betti_m0n(n).unwrap();
        let chi: i128 = b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i128 } else { -(x as i128) }).sum();
        let fact: i128 = (1..=(n as i128 - 3)).product();
        let expected = if (n - 3) % 2 == 0 { fact } else { -fact };
        assert_eq!(chi, expected, "n = {n}");
        let c = compact_betti_m0n(n);
        assert_eq!(c.len(), 2 * (n - 3) + 1);
        assert_eq!(c.iter().sum::<u64>(), b.iter().sum::<u64>());
    }
}

#[test]
fn tables_are_deterministic_and_bounded() {
    for m in 4..=8 {
        assert_eq!(e1_table(m).unwrap().to_csv(), e1_table(m).unwrap().to_csv());
    }
    for g in 2..=4 {
        let t = f1_table(g).unwrap();
        assert!(t.bound_violations().is_empty(), "g = {g}");
    }
}
