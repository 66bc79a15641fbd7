//! Line-delimited cache of evaluated candidates, keyed by canonical form and
//! ambient order.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use signix_core::poly::parse_rational;
use signix_core::search::{evaluate_exact, report_width, Evaluation, Evaluator};
use signix_core::spectra::{index_of_poly, RootInterval};
use signix_core::{CanonicalForm, IntPolynomial, FORMAT_VERSION};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub canonical: String,
    pub n: usize,
    pub charpoly: Vec<String>,
    pub index_lo: String,
    pub index_hi: String,
}

fn format_version() -> u32 {
    FORMAT_VERSION
}

impl CacheEntry {
    pub fn from_evaluation(e: &Evaluation, n: usize) -> Self {
        CacheEntry {
            format_version: FORMAT_VERSION,
            canonical: e.canonical.to_string(),
            n,
            charpoly: e.char_poly().coefficients().iter().map(ToString::to_string).collect(),
            index_lo: e.index.lo().to_string(),
            index_hi: e.index.hi().to_string(),
        }
    }

    /// Rebuilds the evaluation, re-checking the bracket with Sturm counts.
    pub fn to_evaluation(&self) -> Result<Evaluation, String> {
        if self.format_version != FORMAT_VERSION {
            return Err(format!("unsupported format_version {}", self.format_version));
        }
        let canonical: CanonicalForm = self.canonical.parse().map_err(|e| format!("{e}"))?;
        if canonical.order() > self.n {
            return Err(format!("canonical order {} exceeds n = {}", canonical.order(), self.n));
        }
        let coeffs = self
            .charpoly
            .iter()
            .map(|c| c.parse().map_err(|_| format!("bad coefficient {c:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        let poly = IntPolynomial::new(coeffs);
        if poly.degree() != Some(self.n) || !poly.is_monic() {
            return Err(format!("characteristic polynomial is not monic of degree {}", self.n));
        }
        let lo = parse_rational(&self.index_lo).map_err(|e| e.to_string())?;
        let hi = parse_rational(&self.index_hi).map_err(|e| e.to_string())?;
        let bound = num_rational::BigRational::from_integer((self.n as i64).into());
        let index = RootInterval::verified(&poly, lo, hi, &bound)
            .ok_or_else(|| "index bracket fails the Sturm check".to_string())?;
        if index != index_of_poly(&poly, self.n, &report_width()) {
            return Err("index bracket is not the canonical one for this polynomial".to_string());
        }
        Ok(Evaluation { canonical, index })
    }
}

type Key = (CanonicalForm, usize);

/// Evaluator backed by a cache file. New evaluations are kept in memory
/// until [`CachedEvaluator::store`].
pub struct CachedEvaluator {
    path: PathBuf,
    entries: Mutex<HashMap<Key, Evaluation>>,
    fresh: Mutex<usize>,
}

impl CachedEvaluator {
    /// Loads `path`; a missing file is an empty cache. Malformed lines are
    /// errors; inconsistent entries are dropped with a warning.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let mut entries = HashMap::new();
        if path.exists() {
            let file = fs::File::open(path).map_err(|e| CliError::io(path, e))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| CliError::io(path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheEntry = serde_json::from_str(&line).map_err(|e| {
                    CliError::Usage(format!("{}: line {}: malformed cache entry: {e}", path.display(), i + 1))
                })?;
                match entry.to_evaluation() {
                    Ok(ev) => {
                        entries.insert((ev.canonical, entry.n), ev);
                    }
                    Err(why) => log::warn!("{}: line {}: rejected cache entry: {why}", path.display(), i + 1),
                }
            }
        }
        log::info!("loaded {} cache entries from {}", entries.len(), path.display());
        Ok(CachedEvaluator {
            path: path.to_path_buf(),
            entries: Mutex::new(entries),
            fresh: Mutex::new(0),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn fresh(&self) -> usize {
        *self.fresh.lock().expect("cache lock")
    }

    /// Writes every entry to a temporary sibling and renames it over the
    /// cache file.
    pub fn store(&self) -> Result<(), CliError> {
        let entries = self.entries.lock().expect("cache lock");
        let sorted: BTreeMap<&Key, &Evaluation> = entries.iter().collect();
        let tmp = self.path.with_extension("tmp");
        let mut out = fs::File::create(&tmp).map_err(|e| CliError::io(&tmp, e))?;
        for (&(_, n), ev) in sorted {
            let line = serde_json::to_string(&CacheEntry::from_evaluation(ev, n)).expect("serializable");
            writeln!(out, "{line}").map_err(|e| CliError::io(&tmp, e))?;
        }
        out.sync_all().map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &self.path).map_err(|e| CliError::io(&self.path, e))?;
        Ok(())
    }
}

impl Evaluator for CachedEvaluator {
    fn evaluate(&self, canonical: CanonicalForm, n: usize) -> signix_core::Result<Evaluation> {
        if let Some(e) = self.entries.lock().expect("cache lock").get(&(canonical, n)) {
            return Ok(e.clone());
        }
        let e = evaluate_exact(canonical, n)?;
        self.entries.lock().expect("cache lock").insert((canonical, n), e.clone());
        *self.fresh.lock().expect("cache lock") += 1;
        Ok(e)
    }
}
