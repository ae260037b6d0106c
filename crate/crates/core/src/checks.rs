//! The invariant suite behind `hyperstrata check`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::lie::{oracle_component, FreeLie, GradedAlphabet};
use crate::pushforward::{in_filtration, pushforward, rational_component_count, verify_injectivity};
use crate::spectral::{
    betti_m0n, certify_nonvanishing, f1_table, stratification_epoly_check, LieComplex,
};
use crate::strata::{build_t_lg, count_trees, factorial, rooted_automorphism_count, stratum_classes};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// `|Γ(0,n)|` from the recursion for series-reduced rooted trees with `n-1`
/// labelled leaves, grouping set partitions by the block containing 1.
pub fn schroeder_count(n: usize) -> u64 {
    let m = n - 1;
    let binom = |a: usize, b: usize| -> u64 { (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i as u64 + 1)) };
    let mut r = vec![0u64; m + 1];
    let mut b = vec![0u64; m + 1];
    b[0] = 1;
    r[1] = 1;
    b[1] = 1;
    for k in 2..=m {
        r[k] = (1..k).map(|s| binom(k - 1, s - 1) * r[s] * b[k - s]).sum();
        b[k] = r[k] + r[k];
    }
    r[m]
}

type CheckFn = fn(Level) -> Result<String, String>;

fn ok_if(cond: bool, detail: String) -> Result<String, String> {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn base_cases(_: Level) -> Result<String, String> {
    let c2 = certify_nonvanishing(2).map_err(|e| e.to_string())?;
    let c3 = certify_nonvanishing(3).map_err(|e| e.to_string())?;
    let (a, b) = (c2.d1_omega.format(), c3.d1_omega.format());
    ok_if(a == "2·aaab" && b == "2·aabab", format!("d1(omega_2) = {a}, d1(omega_3) = {b}"))
}

fn leading_terms(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 10 } else { 6 };
    let cx = LieComplex::new();
    for g in 2..=top {
        let r = cx.verify_leading_terms(g).map_err(|e| e.to_string())?;
        if !r.holds {
            return Err(format!("g = {g}: {}", r.expansion));
        }
    }
    Ok(format!("2 <= g <= {top}"))
}

fn certificates(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 10 } else { 5 };
    for g in 2..=top {
        certify_nonvanishing(g).map_err(|e| e.to_string())?;
    }
    Ok(format!("2 <= g <= {top}"))
}

fn d1_squared(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 6 } else { 4 };
    let cx = LieComplex::new();
    for g in 2..=top {
        for l in 2..=g {
            if !cx.d1_squared_vanishes(l, g).map_err(|e| e.to_string())? {
                return Err(format!("d1^2 != 0 on V_{{{l},{g}}}"));
            }
        }
    }
    Ok(format!("all basis vectors, 2 <= l <= g <= {top}"))
}

fn lyndon_oracle(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 7 } else { 5 };
    let alphabets = [
        GradedAlphabet::parse("a:odd,b:even").expect("alphabet"),
        GradedAlphabet::odd_letters(3),
    ];
    let mut compared = 0;
    for alpha in alphabets {
        let lie = FreeLie::new(alpha.clone());
        for total in 1..=top {
            for md in crate::lie::multidegrees(alpha.len(), total) {
                let oracle = oracle_component(&alpha, &md).map_err(|e| e.to_string())?.dimension;
                let fast = lie.dimension(&md);
                if oracle != fast {
                    return Err(format!("{alpha} {md:?}: Lyndon {fast}, oracle {oracle}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} multidegrees, total <= {top}"))
}

fn multilinear(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 7 } else { 6 };
    for n in 1..=top {
        let lie = FreeLie::new(GradedAlphabet::odd_letters(n));
        let d = lie.dimension(&vec![1; n]) as u128;
        if d != factorial(n - 1) {
            return Err(format!("n = {n}: {d}"));
        }
        if (3..=11).contains(&n) {
            let top_betti = *betti_m0n(n + 1).map_err(|e| e.to_string())?.last().expect("nonempty");
            if top_betti as u128 != d {
                return Err(format!("n = {n}: top Betti number of M_0,{} is {top_betti}", n + 1));
            }
        }
    }
    Ok(format!("dim Lie(n) = (n-1)! = top Betti of M_0,n+1 for n <= {top}"))
}

fn enumeration_counts(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 10 } else { 8 };
    for n in 3..=top {
        let fast = count_trees(n).map_err(|e| e.to_string())?;
        let slow = schroeder_count(n);
        let orbits: u64 = stratum_classes(n, None)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| c.orbit_size)
            .sum();
        if fast != slow || orbits != slow {
            return Err(format!("n = {n}: generator {fast}, recursion {slow}, orbit sum {orbits}"));
        }
    }
    Ok(format!("3 <= n <= {top}; |Γ(0,4)| = 4, |Γ(0,5)| = 26"))
}

fn automorphisms(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 5 } else { 3 };
    for g in 1..=top {
        for l in 0..=g {
            let t = build_t_lg(l, g).map_err(|e| e.to_string())?;
            let want = factorial((2 * g - 2 * l + 1) as usize) * factorial(l as usize) * (1u128 << l);
            let got = rooted_automorphism_count(t.tree());
            if got != want {
                return Err(format!("T_{{{l},{g}}}: |Aut| = {got}, expected {want}"));
            }
        }
    }
    Ok(format!("0 <= l <= g <= {top}"))
}

fn pushforward_invariants(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 4 } else { 3 };
    let mut total = 0;
    for g in 2..=top {
        let classes = stratum_classes(2 * g as usize + 2, None).map_err(|e| e.to_string())?;
        total += classes.len();
        let bad: Vec<String> = classes
            .par_iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let (t, p) = match c.annotated().and_then(|t| Ok((pushforward(&t)?, t))) {
                    Ok((p, t)) => (t, p),
                    Err(e) => return Some(format!("g = {g}, class {i}: {e}")),
                };
                let zeros = p.genus_labels().iter().filter(|&&x| x == 0).count();
                let problems = [
                    (p.genus() != Ok(g), "genus"),
                    (in_filtration(&t, 0) != t.is_good(), "filtration vs good"),
                    (t.is_good() && c.edge_count > g as usize - 1, "good-tree edge bound"),
                    (rational_component_count(&t) != zeros, "rational components"),
                ];
                let hit: Vec<&str> = problems.iter().filter(|p| p.0).map(|p| p.1).collect();
                (!hit.is_empty()).then(|| format!("g = {g}, class {i}: {}", hit.join(", ")))
            })
            .collect();
        if let Some(b) = bad.first() {
            return Err(b.clone());
        }
    }
    Ok(format!("{total} classes, 2 <= g <= {top}"))
}

fn injectivity(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 4 } else { 3 };
    let mut parts = Vec::new();
    for g in 2..=top {
        let r = verify_injectivity(g).map_err(|e| e.to_string())?;
        if !r.injective() {
            return Err(format!("g = {g}: collisions {:?}", r.collisions));
        }
        parts.push(format!("g={g}: {} classes", r.classes));
    }
    Ok(parts.join(", "))
}

fn epoly(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 8 } else { 6 };
    let mut parts = Vec::new();
    for m in 4..=top {
        let r = stratification_epoly_check(m).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("m = {m}: {r:?}"));
        }
        parts.push(format!("m={m}: {}", r.show()));
    }
    Ok(parts.join("; "))
}

fn f1_bounds(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 4 } else { 3 };
    for g in 2..=top {
        let t = f1_table(g).map_err(|e| e.to_string())?;
        let v = t.bound_violations();
        if !v.is_empty() {
            return Err(format!("g = {g}: cells outside the bounds {v:?}"));
        }
    }
    Ok(format!("2 <= g <= {top}"))
}

const CHECKS: &[(&str, CheckFn)] = &[
    ("base_case_differentials", base_cases),
    ("leading_terms", leading_terms),
    ("certificates", certificates),
    ("d1_squared_zero", d1_squared),
    ("lyndon_vs_oracle", lyndon_oracle),
    ("multilinear_dimensions", multilinear),
    ("enumeration_counts", enumeration_counts),
    ("star_tree_automorphisms", automorphisms),
    ("pushforward_invariants", pushforward_invariants),
    ("pushforward_injectivity", injectivity),
    ("stratification_epolynomial", epoly),
    ("good_page_bounds", f1_bounds),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

/// Runs every check in order; results are deterministic apart from timings.
pub fn run_checks(level: Level) -> Vec<Outcome> {
    CHECKS
        .iter()
        .map(|&(name, f)| {
            let start = Instant::now();
            let r = f(level);
            let millis = start.elapsed().as_millis();
            let (passed, detail) = match r {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome {
                name,
                passed,
                detail,
                millis,
            }
        })
        .collect()
}
