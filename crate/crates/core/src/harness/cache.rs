//! Colored Jones values on disk, one file per `(knot, color)`.
//!
//! A file name is the SHA-256 of the knot id, its PD code, the color and the
//! evaluator version, so a changed diagram or evaluator never reads stale
//! values. Files are written to a temporary name and renamed into place;
//! readers see either nothing or a complete file.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use super::HarnessError;
use crate::jones::{colored_jones_fast, twist_knot_diagram, JonesError, KnotId};
use crate::poly::{parse_terms, write_terms, MultiLaurent, TPoly};
use crate::qtorus::LaurentSequence;
use crate::Integer;

pub const CACHE_ENV: &str = "KNOTAJ_CACHE_DIR";
pub const EVALUATOR_VERSION: &str = "cyclotomic-1";

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, HarnessError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The directory named by `KNOTAJ_CACHE_DIR`, if set.
    pub fn from_env() -> Result<Option<Self>, HarnessError> {
        std::env::var_os(CACHE_ENV).map(Cache::new).transpose()
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(knot: KnotId, diagram: &str, color: i64) -> String {
        let mut h = Sha256::new();
        for part in [knot.to_string().as_str(), diagram, &color.to_string(), EVALUATOR_VERSION] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        h.finalize().iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.terms"))
    }

    pub fn get(&self, knot: KnotId, diagram: &str, color: i64) -> Result<Option<TPoly<Integer>>, HarnessError> {
        let path = self.path(&Self::key(knot, diagram, color));
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let values = read_sequence_file(&text)?;
        match values.as_slice() {
            [(n, v)] if *n == color => Ok(Some(v.clone())),
            _ => Err(HarnessError::SequenceFile { line: 0, msg: format!("{} holds the wrong color", path.display()) }),
        }
    }

    pub fn put(&self, knot: KnotId, diagram: &str, color: i64, value: &TPoly<Integer>) -> Result<(), HarnessError> {
        let key = Self::key(knot, diagram, color);
        let text = write_sequence_file(&knot.to_string(), &[(color, value.clone())])?;
        let tmp = self.dir.join(format!(
            ".{key}.{}.{}.tmp",
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, self.path(&key))?;
        Ok(())
    }

    /// `n ↦ J_{K_m}(n)` backed by this cache.
    pub fn twist_sequence(&self, m: i64) -> Result<LaurentSequence<Integer>, HarnessError> {
        let diagram = twist_knot_diagram(m)?.to_string();
        let cache = self.clone();
        let knot = KnotId::Twist(m);
        Ok(LaurentSequence::odd(knot.to_string(), move |n| {
            if let Some(v) = cache.get(knot, &diagram, n).map_err(|e| e.to_string())? {
                return Ok(v);
            }
            let v = colored_jones_fast(m, n).map_err(|e: JonesError| e.to_string())?;
            cache.put(knot, &diagram, n, &v).map_err(|e| e.to_string())?;
            Ok(v)
        }))
    }
}

/// Sequence files: `# n = <index>` headers, each followed by the value in
/// term format. Other `#` lines are comments.
pub fn read_sequence_file(text: &str) -> Result<Vec<(i64, TPoly<Integer>)>, HarnessError> {
    let mut out = Vec::new();
    let mut current: Option<(i64, usize, String)> = None;
    let finish = |cur: Option<(i64, usize, String)>, out: &mut Vec<(i64, TPoly<Integer>)>| {
        if let Some((n, line, body)) = cur {
            let p = parse_terms::<Integer>(&body)
                .and_then(|p| p.to_tpoly())
                .map_err(|e| HarnessError::SequenceFile { line, msg: e.to_string() })?;
            out.push((n, p));
        }
        Ok::<_, HarnessError>(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(idx) = rest.trim().strip_prefix("n =") {
                let n = idx
                    .trim()
                    .parse()
                    .map_err(|_| HarnessError::SequenceFile { line: i + 1, msg: format!("bad index `{idx}`") })?;
                finish(current.take(), &mut out)?;
                current = Some((n, i + 1, String::new()));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        match &mut current {
            Some((_, _, body)) => {
                body.push_str(line);
                body.push('\n');
            }
            None => {
                return Err(HarnessError::SequenceFile { line: i + 1, msg: "term before any `# n =` header".into() })
            }
        }
    }
    finish(current, &mut out)?;
    Ok(out)
}

pub fn write_sequence_file(name: &str, values: &[(i64, TPoly<Integer>)]) -> Result<String, HarnessError> {
    let mut s = format!("# sequence {name}\n");
    for (n, v) in values {
        s.push_str(&format!("# n = {n}\n"));
        s.push_str(&write_terms(&MultiLaurent::from_tpoly(v))?);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::quantum_integer;

    #[test]
    fn sequence_file_roundtrip() {
        let values: Vec<_> = (1..5).map(|n| (n, quantum_integer::<Integer>(n))).collect();
        let text = write_sequence_file("unknot", &values).unwrap();
        assert_eq!(read_sequence_file(&text).unwrap(), values);
        assert!(read_sequence_file("[0, 0, 0, 1, 1]\n").is_err());
    }

    #[test]
    fn zero_value_roundtrips() {
        let text = write_sequence_file("z", &[(0, TPoly::zero())]).unwrap();
        assert_eq!(read_sequence_file(&text).unwrap(), vec![(0, TPoly::zero())]);
    }

    #[test]
    fn cache_roundtrip_and_key_sensitivity() {
        let dir = std::env::temp_dir().join(format!("knotaj-cache-test-{}", std::process::id()));
        let cache = Cache::new(&dir).unwrap();
        let seq = cache.twist_sequence(-1).unwrap();
        let direct = crate::jones::twist_sequence(-1).unwrap();
        for n in 1..6 {
            assert_eq!(*seq.get(n).unwrap(), *direct.get(n).unwrap());
        }
        // A fresh sequence must read the same values back from disk.
        let again = cache.twist_sequence(-1).unwrap();
        assert_eq!(*again.get(5).unwrap(), *direct.get(5).unwrap());
        let d = twist_knot_diagram(-1).unwrap().to_string();
        assert!(cache.get(KnotId::Twist(-1), &d, 5).unwrap().is_some());
        assert!(cache.get(KnotId::Twist(-1), "other diagram", 5).unwrap().is_none());
        assert_ne!(Cache::key(KnotId::Twist(1), &d, 5), Cache::key(KnotId::Twist(-1), &d, 5));
        fs::remove_dir_all(&dir).unwrap();
    }
}
