use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use siegel5_core::gendata::{parse_generator_table, sha256_hex, GENERATOR_TABLE};
use siegel5_core::polyring::{jacobian_square_poly, parse_jacobian_square, JACOBIAN_SQUARE_TABLE};
use siegel5_core::{GeneratorSet, GradedPoly};

use crate::report::Header;

pub const GENERATOR_FILE: &str = "generators.tsv";
pub const JACOBIAN_SQUARE_FILE: &str = "jacobian_square.tsv";

/// The two data tables, parsed, with the checksums of the bytes they came from.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub gens: GeneratorSet,
    pub generator_rows: usize,
    pub jacobian_square: GradedPoly,
    pub checksums: BTreeMap<&'static str, String>,
}

impl Dataset {
    pub fn embedded() -> Self {
        let rows = parse_generator_table(GENERATOR_TABLE).expect("embedded table parses");
        Dataset {
            gens: GeneratorSet::embedded().clone(),
            generator_rows: rows.len(),
            jacobian_square: jacobian_square_poly(),
            checksums: BTreeMap::from([
                (GENERATOR_FILE, sha256_hex(GENERATOR_TABLE.as_bytes())),
                (JACOBIAN_SQUARE_FILE, sha256_hex(JACOBIAN_SQUARE_TABLE.as_bytes())),
            ]),
        }
    }

    /// Reads both tables from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, String> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))
        };
        let gen_text = read(GENERATOR_FILE)?;
        let pj_text = read(JACOBIAN_SQUARE_FILE)?;
        let rows = parse_generator_table(&gen_text).map_err(|e| format!("{GENERATOR_FILE}: {e}"))?;
        let gens = GeneratorSet::from_table_text(&gen_text).map_err(|e| format!("{GENERATOR_FILE}: {e}"))?;
        let jacobian_square =
            parse_jacobian_square(&pj_text).map_err(|e| format!("{JACOBIAN_SQUARE_FILE}: {e}"))?;
        Ok(Dataset {
            gens,
            generator_rows: rows.len(),
            jacobian_square,
            checksums: BTreeMap::from([
                (GENERATOR_FILE, sha256_hex(gen_text.as_bytes())),
                (JACOBIAN_SQUARE_FILE, sha256_hex(pj_text.as_bytes())),
            ]),
        })
    }

    pub fn load(dir: Option<&Path>) -> Result<Self, String> {
        match dir {
            Some(d) => Self::from_dir(d),
            None => Ok(Self::embedded()),
        }
    }

    pub fn header(&self) -> Header {
        Header {
            checksums: self.checksums.clone(),
        }
    }
}
