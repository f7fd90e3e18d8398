use std::fmt;
use std::str::FromStr;

use crate::algebra::{is_morphism, maps_commute, minus_algebra, plus_algebra, BiHomAlgebra};
use crate::report::{IdentityReport, Verdict};

use super::{check_identity, identity, IdentityDef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Alternative,
    Malcev,
    Jordan,
    Lie,
    Full,
}

impl Profile {
    pub const ALL: [Profile; 5] = [Profile::Alternative, Profile::Malcev, Profile::Jordan, Profile::Lie, Profile::Full];

    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Alternative => "alternative",
            Profile::Malcev => "malcev",
            Profile::Jordan => "jordan",
            Profile::Lie => "lie",
            Profile::Full => "full",
        }
    }

    /// Registry rows run by this profile, in registry order.
    pub fn identities(self) -> Vec<&'static IdentityDef> {
        let names: &[&str] = match self {
            Profile::Alternative => &[
                "left_alternative",
                "right_alternative",
                "left_alternative_short",
                "right_alternative_short",
                "regular_alternative_pair",
                "associator_symmetries",
                "moufang_i",
                "moufang_ii",
                "moufang_iii",
                "H_decomposition",
                "F_equals_f_cyclic",
                "f_alternating",
                "f_zeta_formula",
            ],
            Profile::Malcev => &["bihom_skewsymmetry", "bihom_malcev", "classical_malcev"],
            Profile::Lie => &["bihom_skewsymmetry", "bihom_jacobi"],
            Profile::Jordan => &["bihom_commutativity", "bihom_jordan", "bihom_jordan_cyclic"],
            Profile::Full => return super::registry().iter().collect(),
        };
        names.iter().map(|n| identity(n).expect("profile row is registered")).collect()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Profile, String> {
        Profile::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown profile `{s}` (expected alternative, malcev, jordan, lie or full)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Malcev,
    Jordan,
}

/// Reports for commutation and multiplicativity of the structure maps.
pub fn fact_reports(b: &BiHomAlgebra) -> Vec<IdentityReport> {
    let mut alpha = is_morphism(b.algebra(), b.alpha());
    alpha.identity = "alpha_multiplicative".into();
    let mut beta = is_morphism(b.algebra(), b.beta());
    beta.identity = "beta_multiplicative".into();
    vec![maps_commute(b.alpha(), b.beta(), b.ring()), alpha, beta]
}

/// Fact reports followed by the profile rows.
pub fn run_suite(b: &BiHomAlgebra, profile: Profile) -> Vec<IdentityReport> {
    let mut out = fact_reports(b);
    out.extend(profile.identities().into_iter().map(|def| check_identity(b, def)));
    out
}

/// Runs the Malcev (resp. Jordan) profile on the commutator (resp. plus)
/// algebra. NOT-APPLICABLE rows are skipped; the first failure is returned
/// with `part` naming the row.
pub fn check_admissibility(b: &BiHomAlgebra, kind: Admissibility) -> IdentityReport {
    let name = match kind {
        Admissibility::Malcev => "malcev_admissible",
        Admissibility::Jordan => "jordan_admissible",
    };
    if let Err(e) = b.ensure_regular(name) {
        return IdentityReport::not_applicable(name, e.to_string());
    }
    let (derived, profile) = match kind {
        Admissibility::Malcev => (minus_algebra(b), Profile::Malcev),
        Admissibility::Jordan => (plus_algebra(b), Profile::Jordan),
    };
    let derived = match derived {
        Ok(d) => d,
        Err(e) => return IdentityReport::not_applicable(name, e.to_string()),
    };
    let mut ran = 0;
    for def in profile.identities() {
        let r = check_identity(&derived, def);
        match r.verdict {
            Verdict::NotApplicable => continue,
            Verdict::Holds => ran += 1,
            _ => {
                let part = match &r.part {
                    Some(p) => format!("{}: {p}", def.name),
                    None => def.name.to_string(),
                };
                return IdentityReport {
                    identity: name.into(),
                    part: Some(part),
                    ..r
                };
            }
        }
    }
    if ran == 0 {
        return IdentityReport::not_applicable(name, "no applicable identity");
    }
    IdentityReport::holds(name)
}
