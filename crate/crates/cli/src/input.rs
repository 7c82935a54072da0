use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use semiband::sgp::parse_sgp;
use semiband::transformations::{parse_tfm, transformation_semigroup};
use semiband::FiniteSemigroup;

/// A `.sgp` table, or the semigroup generated by the maps of a `.tfm` file.
pub fn load(path: &Path) -> Result<FiniteSemigroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let s = if path.extension().is_some_and(|e| e == "tfm") {
        let gens = parse_tfm(&text).with_context(|| format!("parsing {}", path.display()))?;
        transformation_semigroup(&gens)?.semigroup
    } else {
        parse_sgp(&text).with_context(|| format!("parsing {}", path.display()))?
    };
    Ok(s)
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}
