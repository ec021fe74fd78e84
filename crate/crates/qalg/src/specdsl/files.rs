//! Embedded algebra description files. Each built-in algebra ships as a
//! plain-text description in the same format users write by hand, so the
//! file loader and the hard-coded constructors can be checked against each
//! other.

pub const SO22_QALG: &str = include_str!("../../algebras/so22.qalg");
pub const USO22_QALG: &str = include_str!("../../algebras/uso22.qalg");
pub const UISO21_QALG: &str = include_str!("../../algebras/uiso21.qalg");
pub const USL2_QALG: &str = include_str!("../../algebras/usl2.qalg");

/// Embedded source text for a built-in algebra name, if one exists.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "so22" => Some(SO22_QALG),
        "uso22" => Some(USO22_QALG),
        "uiso21" => Some(UISO21_QALG),
        "usl2" => Some(USL2_QALG),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specdsl::{elaborate, parse};

    #[test]
    fn embedded_sources_parse() {
        for name in ["so22", "uso22", "uiso21", "usl2"] {
            let src = builtin_source(name).unwrap();
            let doc = parse(src).unwrap_or_else(|e| panic!("{name}: {e}"));
            let out = elaborate(&doc, name, 3).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(out.warnings.is_empty(), "{name}: {:?}", out.warnings);
        }
    }
}
