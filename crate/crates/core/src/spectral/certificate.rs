use serde::Serialize;
use serde_json::json;

use crate::error::SpectralError;
use crate::pushforward::in_filtration;
use crate::spectral::vspace::{edge_alphabet, term_list, LeadingTerms, LieComplex, VSpaceElement};
use crate::strata::{build_t_lg, max_good_tree_edges, stratum_classes};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

/// Witnessed checks that `d₁: V_{g,g} → V_{g-1,g}` is nonzero and survives to
/// the second page of the good-tree spectral sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub g: u32,
    pub omega: VSpaceElement,
    pub d1_omega: VSpaceElement,
    pub d1_d1_omega: VSpaceElement,
    pub leading: LeadingTerms,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms = |x: &VSpaceElement| {
            term_list(x)
                .into_iter()
                .map(|(w, c)| json!({"word": w, "coeff": c}))
                .collect::<Vec<_>>()
        };
        json!({
            "format": 1,
            "g": self.g,
            "omega": self.omega.format(),
            "d1_omega": self.d1_omega.format(),
            "d1_omega_terms": terms(&self.d1_omega),
            "d1d1_zero": self.d1_d1_omega.is_zero(),
            "leading_terms": self.leading,
            "good_stratum_check": self.check("target_good").is_some_and(|c| c.passed)
                && self.check("source_page_empty").is_some_and(|c| c.passed),
            "checks": self.checks,
            "passed": self.passed(),
        })
    }

    /// Line-oriented narrative, stable across runs.
    pub fn log(&self) -> String {
        let g = self.g;
        let mut out = format!("certificate g={g}\n");
        out += &format!("omega = {} in V_{{{g},{g}}}\n", self.omega.format());
        out += &format!("d1(omega) = {} in V_{{{},{g}}}\n", self.d1_omega.format(), g - 1);
        out += &format!("d1(d1(omega)) = {}\n", self.d1_d1_omega.format());
        out += &format!(
            "leading coefficients (a3b, a2bab) = ({}, {}), expected {:?}\n",
            self.leading.a3b, self.leading.a2bab, self.leading.expected
        );
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out += &format!("[{mark}] {}: {}\n", c.name, c.witness);
        }
        if self.passed() {
            out += &format!(
                "conclusion: d1(omega) spans a nonzero class in F_2^{{{},{}}}, so H^{g}_c of the locus without rational components is nonzero\n",
                1 - g as i64,
                2 * g - 1
            );
        } else {
            out += &format!("conclusion: certificate failed ({})\n", self.failed_checks().join(", "));
        }
        out
    }
}

fn check(name: &str, passed: bool, witness: String) -> Check {
    Check {
        name: name.into(),
        passed,
        witness,
    }
}

/// Builds the certificate; any failing check is returned as
/// [`SpectralError::FailedCertificate`].
pub fn certify_nonvanishing(g: u32) -> Result<Certificate, SpectralError> {
    if !(2..=10).contains(&g) {
        return Err(SpectralError::OutOfRange {
            what: "g",
            value: g as i64,
            range: "2..=10",
        });
    }
    let cx = LieComplex::new();
    let alpha = edge_alphabet();
    let mut checks = Vec::new();

    let basis = cx.basis(g, g)?;
    let shown: Vec<String> = basis.iter().map(|k| k.show(&alpha)).collect();
    checks.push(check(
        "dim_top_is_one",
        basis.len() == 1,
        format!("basis of V_{{{g},{g}}} = [{}]", shown.join(", ")),
    ));

    let omega = cx.omega(g)?;
    let d1_omega = cx.d1(&omega)?;
    checks.push(check("d1_nonzero", !d1_omega.is_zero(), d1_omega.format()));

    let d1_d1_omega = cx.d1(&d1_omega)?;
    checks.push(check("d1_squared_zero", d1_d1_omega.is_zero(), d1_d1_omega.format()));

    let t = build_t_lg(g - 1, g)?;
    let edges = t.graph().edge_count();
    let good = t.is_good();
    let no_rational = in_filtration(&t, 0);
    checks.push(check(
        "target_good",
        good && edges <= (g - 1) as usize && no_rational,
        format!(
            "T_{{{},{g}}}: good = {good}, edges = {edges}, rho = {:?}, no rational components = {no_rational}",
            g - 1,
            t.rhos()
        ),
    ));

    let n = 2 * g as usize + 2;
    let max_edges = max_good_tree_edges(n)?;
    let mut witness = format!("good trees of type (0,{n}) have at most {max_edges} edges");
    let mut empty = max_edges < g as usize;
    if n <= 10 {
        let mut good_with_g_edges = 0;
        for c in stratum_classes(n, Some(g as usize))? {
            if c.annotated()?.is_good() {
                good_with_g_edges += 1;
            }
        }
        witness += &format!("; exhaustive count of good {g}-edge classes = {good_with_g_edges}");
        empty &= good_with_g_edges == 0;
    }
    checks.push(check("source_page_empty", empty, witness));

    let leading = cx.verify_leading_terms(g)?;
    let cert = Certificate {
        g,
        omega,
        d1_omega,
        d1_d1_omega,
        leading,
        checks,
    };
    if cert.passed() {
        Ok(cert)
    } else {
        Err(SpectralError::FailedCertificate(Box::new(cert)))
    }
}
