//! Algebra resolution: turn a name or a file path into a bundle carrying
//! the bracket table, the coproduct structure when one exists, the default
//! contraction rescaling, the phase-space realization kind when the algebra
//! has a realized table, and the subalgebra cases worth certifying. The
//! bundle also knows which check groups make sense for it.

use std::path::Path;

use thiserror::Error;

use crate::contraction::ContractionMap;
use crate::hopf::{builtin as hopf_builtin, HopfSpec};
use crate::ncalgebra::{builtin as alg_builtin, AlgebraSpec};
use crate::realization::RealizationKind;
use crate::specdsl::{self, SpecDslError};

/// Names accepted by `--algebra` without consulting the filesystem.
pub const BUILTIN_NAMES: [&str; 5] = ["so22", "uso22", "uiso21", "usl2", "uso22-swapped"];

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown algebra `{0}`: not a built-in name and not a readable file")]
    Unknown(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Dsl(#[from] SpecDslError),
}

/// What a candidate generator subset is expected to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubalgebraExpectation {
    /// Closes under the bracket, coproduct and antipode.
    HopfSubalgebra,
    /// Closes under the bracket but some coproduct escapes the span.
    ClosedNotHopf,
    /// Closes under the bracket (no coproduct structure to ask about).
    Closed,
}

#[derive(Clone, Debug)]
pub struct SubalgebraCase {
    pub subset: Vec<String>,
    pub expect: SubalgebraExpectation,
}

impl SubalgebraCase {
    fn new(subset: &[&str], expect: SubalgebraExpectation) -> Self {
        SubalgebraCase { subset: subset.iter().map(|s| s.to_string()).collect(), expect }
    }
}

/// Check groups the verifier knows how to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Jacobi,
    Hopf,
    RMatrix,
    Realization,
    Symmetry,
    Subalgebras,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Jacobi,
        CheckKind::Hopf,
        CheckKind::RMatrix,
        CheckKind::Realization,
        CheckKind::Symmetry,
        CheckKind::Subalgebras,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            CheckKind::Jacobi => "jacobi",
            CheckKind::Hopf => "hopf",
            CheckKind::RMatrix => "rmatrix",
            CheckKind::Realization => "realization",
            CheckKind::Symmetry => "symmetry",
            CheckKind::Subalgebras => "subalgebras",
        }
    }

    pub fn from_id(id: &str) -> Option<CheckKind> {
        CheckKind::ALL.iter().copied().find(|k| k.id() == id)
    }
}

/// Everything the front end needs to know about one resolved algebra.
pub struct AlgebraBundle {
    pub name: String,
    pub spec: AlgebraSpec,
    pub hopf: Option<HopfSpec>,
    pub contraction: Option<ContractionMap>,
    pub realization: Option<RealizationKind>,
    pub subalgebra_cases: Vec<SubalgebraCase>,
    /// Non-fatal notes from file elaboration (defaulted brackets and such).
    pub warnings: Vec<String>,
}

impl AlgebraBundle {
    pub fn order(&self) -> u32 {
        self.spec.order()
    }

    /// True when the classical Yang-Baxter (Schouten) check applies: the
    /// bracket table must be tau-free and linear in the generators.
    pub fn has_classical_rmatrix(&self) -> bool {
        self.hopf.is_none()
            && self.spec.rank_of("D").is_some()
            && self.spec.rank_of("H").is_some()
            && crate::contraction::StructureConstants::extract(&self.spec).is_ok()
    }

    /// The check groups `--checks all` expands to for this algebra.
    pub fn applicable_checks(&self) -> Vec<CheckKind> {
        let mut out = vec![CheckKind::Jacobi];
        if self.hopf.is_some() {
            out.push(CheckKind::Hopf);
        }
        let quantum_r = self.hopf.as_ref().is_some_and(|h| h.rmatrix_pair().is_some());
        if quantum_r || self.has_classical_rmatrix() {
            out.push(CheckKind::RMatrix);
        }
        if self.realization.is_some() {
            out.push(CheckKind::Realization);
            out.push(CheckKind::Symmetry);
        }
        if !self.subalgebra_cases.is_empty() {
            out.push(CheckKind::Subalgebras);
        }
        out
    }
}

fn conformal_cases(with_hopf: bool) -> Vec<SubalgebraCase> {
    if with_hopf {
        vec![
            SubalgebraCase::new(&["D", "H", "C1"], SubalgebraExpectation::HopfSubalgebra),
            SubalgebraCase::new(&["H", "P", "K"], SubalgebraExpectation::ClosedNotHopf),
        ]
    } else {
        vec![
            SubalgebraCase::new(&["D", "H", "C1"], SubalgebraExpectation::Closed),
            SubalgebraCase::new(&["H", "P", "K"], SubalgebraExpectation::Closed),
        ]
    }
}

fn builtin_bundle(name: &str, order: u32) -> Option<AlgebraBundle> {
    let bundle = match name {
        "so22" => AlgebraBundle {
            name: name.to_string(),
            spec: alg_builtin::so22(order),
            hopf: None,
            contraction: None,
            realization: Some(RealizationKind::Classical),
            subalgebra_cases: conformal_cases(false),
            warnings: Vec::new(),
        },
        "uso22" => AlgebraBundle {
            name: name.to_string(),
            spec: alg_builtin::uso22(order),
            hopf: Some(hopf_builtin::uso22(order)),
            contraction: Some(ContractionMap::poincare()),
            realization: Some(RealizationKind::Deformed),
            subalgebra_cases: conformal_cases(true),
            warnings: Vec::new(),
        },
        "uiso21" => AlgebraBundle {
            name: name.to_string(),
            spec: alg_builtin::uiso21(order),
            hopf: Some(hopf_builtin::uiso21(order)),
            contraction: None,
            realization: None,
            subalgebra_cases: vec![
                SubalgebraCase::new(&["D", "H", "C1"], SubalgebraExpectation::HopfSubalgebra),
                SubalgebraCase::new(&["H", "P", "K"], SubalgebraExpectation::HopfSubalgebra),
            ],
            warnings: Vec::new(),
        },
        "usl2" => AlgebraBundle {
            name: name.to_string(),
            spec: alg_builtin::usl2(order),
            hopf: Some(hopf_builtin::usl2(order)),
            contraction: None,
            realization: None,
            subalgebra_cases: Vec::new(),
            warnings: Vec::new(),
        },
        "uso22-swapped" => AlgebraBundle {
            name: name.to_string(),
            spec: alg_builtin::uso22_swapped(order),
            hopf: Some(hopf_builtin::uso22_swapped(order)),
            contraction: None,
            realization: None,
            subalgebra_cases: vec![
                SubalgebraCase::new(&["D", "P", "C2"], SubalgebraExpectation::HopfSubalgebra),
                SubalgebraCase::new(&["H", "P", "K"], SubalgebraExpectation::ClosedNotHopf),
            ],
            warnings: Vec::new(),
        },
        _ => return None,
    };
    Some(bundle)
}

fn file_bundle(path: &Path, order: u32) -> Result<AlgebraBundle, RegistryError> {
    let text = std::fs::read_to_string(path).map_err(|source| RegistryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".to_string());
    let doc = specdsl::parse(&text)?;
    let out = specdsl::elaborate(&doc, &name, order)?;
    Ok(AlgebraBundle {
        name,
        spec: out.algebra,
        hopf: out.hopf,
        contraction: out.contraction,
        realization: None,
        subalgebra_cases: Vec::new(),
        warnings: out.warnings,
    })
}

/// Resolve `--algebra`: a built-in name first, otherwise a `.qalg` path.
pub fn resolve(name_or_path: &str, order: u32) -> Result<AlgebraBundle, RegistryError> {
    if let Some(bundle) = builtin_bundle(name_or_path, order) {
        return Ok(bundle);
    }
    let path = Path::new(name_or_path);
    if path.exists() {
        return file_bundle(path, order);
    }
    Err(RegistryError::Unknown(name_or_path.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_resolve() {
        for name in BUILTIN_NAMES {
            let b = resolve(name, 2).unwrap();
            assert_eq!(b.name, name);
            assert_eq!(b.order(), 2);
            assert!(b.applicable_checks().contains(&CheckKind::Jacobi));
        }
    }

    #[test]
    fn applicable_checks_follow_structure() {
        let classical = resolve("so22", 2).unwrap();
        let checks = classical.applicable_checks();
        assert!(checks.contains(&CheckKind::RMatrix), "classical Schouten check");
        assert!(checks.contains(&CheckKind::Realization));
        assert!(!checks.contains(&CheckKind::Hopf));

        let deformed = resolve("uso22", 2).unwrap();
        assert_eq!(deformed.applicable_checks(), CheckKind::ALL.to_vec());

        let contracted = resolve("uiso21", 2).unwrap();
        let checks = contracted.applicable_checks();
        assert!(checks.contains(&CheckKind::Hopf));
        assert!(!checks.contains(&CheckKind::Realization));
    }

    #[test]
    fn files_resolve_by_path() {
        let dir = std::env::temp_dir().join("qalg-registry-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tiny.qalg");
        std::fs::write(&path, "generators: A, B\nbrackets:\n[A, B] = B\n").unwrap();
        let b = resolve(path.to_str().unwrap(), 3).unwrap();
        assert_eq!(b.name, "tiny");
        assert_eq!(b.spec.generator_names(), &["A".to_string(), "B".to_string()]);
        assert!(b.hopf.is_none());
        assert_eq!(b.applicable_checks(), vec![CheckKind::Jacobi]);

        assert!(matches!(resolve("nonsense", 3), Err(RegistryError::Unknown(_))));
    }
}
