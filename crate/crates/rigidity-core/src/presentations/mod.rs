//! The catalog of the eight cohomology-ring presentations, plus the `.pres`
//! text format with parser and canonical formatter.

mod format;
mod parse;

pub use format::format_canonical;
pub use parse::{parse_presentation, ParseError};

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::polyring::{Ctx, Polynomial, Rat};

use thiserror::Error;

/// A graded presentation `Q[y_1..y_n] / <g_1..g_m>`: weighted generators and
/// weighted-homogeneous relations. The distinguished weight-1 generator
/// represents the Kaehlerian class.
#[derive(Debug, Clone, PartialEq)]
pub struct RingPresentation {
    name: String,
    ctx: Ctx,
    relations: Vec<Relation>,
    kaehler: usize,
}

/// One labeled relation, homogeneous of the declared weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub label: String,
    pub weight: u64,
    pub poly: Polynomial<Rat>,
}

impl RingPresentation {
    pub(crate) fn assemble(
        name: String,
        ctx: Ctx,
        relations: Vec<Relation>,
    ) -> Result<Self, PresentationDefect> {
        let mut kaehler = None;
        for i in 0..ctx.len() {
            if ctx.weight(i) == 1 {
                if kaehler.is_some() {
                    return Err(PresentationDefect::MultipleWeightOneGenerators);
                }
                kaehler = Some(i);
            }
        }
        let kaehler = kaehler.ok_or(PresentationDefect::NoWeightOneGenerator)?;
        for rel in &relations {
            if !rel.poly.weighted_degree().is_homogeneous_of(rel.weight) {
                return Err(PresentationDefect::NotHomogeneous {
                    label: rel.label.clone(),
                    weight: rel.weight,
                });
            }
        }
        Ok(RingPresentation {
            name,
            ctx,
            relations,
            kaehler,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Index of the distinguished weight-1 generator.
    pub fn kaehler_generator(&self) -> usize {
        self.kaehler
    }

    /// Largest relation weight (0 for a free ring).
    pub fn max_relation_weight(&self) -> u64 {
        self.relations.iter().map(|r| r.weight).max().unwrap_or(0)
    }

    /// SHA-256 of the canonical text form, hex-encoded.
    pub fn sha256(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format_canonical(self).as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Structural problems detected while assembling a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationDefect {
    #[error("relation `{label}` is not homogeneous of weight {weight}")]
    NotHomogeneous { label: String, weight: u64 },
    #[error("presentation has no weight-1 generator")]
    NoWeightOneGenerator,
    #[error("presentation has multiple weight-1 generators")]
    MultipleWeightOneGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown presentation `{0}` (expected one of {})", CATALOG_NAMES.join(", "))]
    UnknownName(String),
}

/// Catalog names in canonical order.
pub const CATALOG_NAMES: [&str; 8] = [
    "F4_C3", "F4_B3", "E6_A6", "E6_D5", "E7_E6", "E7_D6", "E7_A7", "E8_E7",
];

const CATALOG_SOURCES: [(&str, &str); 8] = [
    ("F4_C3", include_str!("../../presets/f4_c3.pres")),
    ("F4_B3", include_str!("../../presets/f4_b3.pres")),
    ("E6_A6", include_str!("../../presets/e6_a6.pres")),
    ("E6_D5", include_str!("../../presets/e6_d5.pres")),
    ("E7_E6", include_str!("../../presets/e7_e6.pres")),
    ("E7_D6", include_str!("../../presets/e7_d6.pres")),
    ("E7_A7", include_str!("../../presets/e7_a7.pres")),
    ("E8_E7", include_str!("../../presets/e8_e7.pres")),
];

fn catalog() -> &'static Vec<RingPresentation> {
    static CATALOG: OnceLock<Vec<RingPresentation>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        CATALOG_SOURCES
            .iter()
            .map(|(name, src)| {
                let pres = parse_presentation(src)
                    .unwrap_or_else(|e| panic!("builtin `{name}` failed to parse: {e}"));
                assert_eq!(pres.name(), *name, "builtin name mismatch");
                pres
            })
            .collect()
    })
}

/// Returns a built-in presentation by name.
pub fn builtin(name: &str) -> Result<&'static RingPresentation, CatalogError> {
    catalog()
        .iter()
        .find(|p| p.name() == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

/// All built-in presentations in catalog order.
pub fn all_builtins() -> &'static [RingPresentation] {
    catalog()
}

/// The raw `.pres` source of a built-in.
pub fn builtin_source(name: &str) -> Result<&'static str, CatalogError> {
    CATALOG_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| *src)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}
