use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviDatum, RootDatum, SimpleCoords, Weight};

type Key = (u16, SimpleCoords);

/// Kostant partition function for a fixed list of positive roots: the number
/// of ways to write β as an ℕ-combination of the roots.
///
/// The recursion runs over the roots in a fixed order on simple-root
/// coordinates and is memoised. Queries take a shared lock for lookups and a
/// single exclusive lock at the end to publish new entries, so one table can
/// serve a parallel sum over W.
pub struct PartitionTable {
    family: Family,
    rank: usize,
    key: String,
    roots: Vec<Weight>,
    coords: Vec<SimpleCoords>,
    /// bit i set if some root at position ≥ k has α_i in its support
    suffix_support: Vec<u32>,
    memo: RwLock<HashMap<Key, u128>>,
    values: RwLock<BTreeMap<Weight, u128>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    key: String,
    entries: Vec<(Vec<i32>, u128)>,
}

fn support(c: &SimpleCoords) -> u32 {
    c.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .fold(0, |m, (i, _)| m | (1 << i))
}

impl PartitionTable {
    /// Table for an arbitrary list of positive roots of `datum`. `tag` names
    /// the list in cache keys.
    pub fn new(datum: &RootDatum, roots: &[Weight], tag: &str) -> Result<Self> {
        let mut pairs: Vec<(SimpleCoords, Weight)> = Vec::with_capacity(roots.len());
        for r in roots {
            let c = datum
                .simple_coords(r)
                .filter(|c| c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0))
                .ok_or_else(|| Error::InvalidWeight(format!("{r} is not a positive root of {}", datum.label())))?;
            pairs.push((c, r.clone()));
        }
        // roots touching α1 first, then α2, ...: once the roots supported on
        // α_i are used up, coordinate i must already be zero
        pairs.sort_by(|a, b| {
            let la = a.0.iter().position(|&x| x != 0);
            let lb = b.0.iter().position(|&x| x != 0);
            la.cmp(&lb).then(b.0.cmp(&a.0))
        });
        let mut suffix_support = vec![0u32; pairs.len() + 1];
        for k in (0..pairs.len()).rev() {
            suffix_support[k] = suffix_support[k + 1] | support(&pairs[k].0);
        }
        let mut sorted_roots: Vec<Weight> = pairs.iter().map(|p| p.1.clone()).collect();
        sorted_roots.sort();
        let key = format!(
            "{}{}:{}:{}",
            datum.family(),
            datum.rank(),
            tag,
            sorted_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(";")
        );
        Ok(PartitionTable {
            family: datum.family(),
            rank: datum.rank(),
            key,
            coords: pairs.iter().map(|p| p.0.clone()).collect(),
            roots: pairs.into_iter().map(|p| p.1).collect(),
            suffix_support,
            memo: RwLock::new(HashMap::new()),
            values: RwLock::new(BTreeMap::new()),
        })
    }

    /// The full Kostant partition function P (all of R₊).
    pub fn full(datum: &RootDatum) -> Self {
        Self::new(datum, datum.positive_roots(), "full").expect("positive roots")
    }

    /// P̄, generated by R₊ ∖ R̄₊.
    pub fn for_levi(levi: &LeviDatum) -> Self {
        let rbar = levi.rbar_plus();
        let roots: Vec<Weight> = levi
            .parent()
            .positive_roots()
            .iter()
            .filter(|a| rbar.binary_search(a).is_err())
            .cloned()
            .collect();
        Self::new(levi.parent(), &roots, &format!("levi{:?}", levi.sbar())).expect("positive roots")
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    /// Content hash identifying the root list, used as cache file name.
    pub fn cache_key(&self) -> String {
        hex::encode(Sha256::digest(self.key.as_bytes()))
    }

    /// Number of memoised intermediate states.
    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn count(&self, beta: &Weight) -> u128 {
        if beta.is_zero() {
            return 1;
        }
        if let Some(&v) = self.values.read().expect("values lock").get(beta) {
            return v;
        }
        let Some(c) = crate::rootsys::simple_coords(self.family, self.rank, beta) else {
            return 0;
        };
        if c.iter().any(|&x| x < 0) {
            return 0;
        }
        let mut local: HashMap<Key, u128> = HashMap::new();
        let v = {
            let shared = self.memo.read().expect("memo lock");
            self.go(0, &c, &shared, &mut local)
        };
        if !local.is_empty() {
            self.memo.write().expect("memo lock").extend(local);
        }
        self.values.write().expect("values lock").insert(beta.clone(), v);
        v
    }

    fn go(&self, k: usize, c: &SimpleCoords, shared: &HashMap<Key, u128>, local: &mut HashMap<Key, u128>) -> u128 {
        if c.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == self.coords.len() || support(c) & !self.suffix_support[k] != 0 {
            return 0;
        }
        let key = (k as u16, c.clone());
        if let Some(&v) = shared.get(&key).or_else(|| local.get(&key)) {
            return v;
        }
        let r = &self.coords[k];
        let mut cur = c.clone();
        let mut total: u128 = 0;
        loop {
            total = total
                .checked_add(self.go(k + 1, &cur, shared, local))
                .expect("partition count overflow");
            for (x, d) in cur.iter_mut().zip(r) {
                *x -= d;
            }
            if cur.iter().any(|&x| x < 0) {
                break;
            }
        }
        local.insert(key, total);
        total
    }

    fn cache_path(&self, dir: &Path) -> PathBuf {
        dir.join(format!("partition-{}.json", &self.cache_key()[..16]))
    }

    /// Writes the computed values as a sorted list of (doubled coords, value).
    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let path = self.cache_path(dir);
        let file = CacheFile {
            key: self.key.clone(),
            entries: self
                .values
                .read()
                .expect("values lock")
                .iter()
                .map(|(w, v)| (w.doubled().to_vec(), *v))
                .collect(),
        };
        let tmp = path.with_extension("json.tmp");
        let mut f = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
        f.write_all(serde_json::to_string(&file)?.as_bytes())
            .map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }

    /// Loads previously saved values if a cache file for this root list
    /// exists. Returns the number of entries loaded.
    pub fn load(&self, dir: &Path) -> Result<usize> {
        let path = self.cache_path(dir);
        if !path.exists() {
            return Ok(0);
        }
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let file: CacheFile = serde_json::from_str(&text)?;
        if file.key != self.key {
            return Err(Error::Config(format!("cache file {} belongs to another root list", path.display())));
        }
        let n = file.entries.len();
        let mut values = self.values.write().expect("values lock");
        for (d, v) in file.entries {
            values.insert(Weight::from_doubled(&d), v);
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    /// Generating-function product Π 1/(1 − e^α), truncated to the box of
    /// simple coordinates [0, c(β)].
    fn series(d: &RootDatum, roots: &[Weight], beta: &Weight) -> u128 {
        let target = d.simple_coords(beta).unwrap();
        let mut table: HashMap<SimpleCoords, u128> = HashMap::new();
        table.insert(SimpleCoords::from_elem(0, target.len()), 1);
        for r in roots {
            let rc = d.simple_coords(r).unwrap();
            let mut keys: Vec<SimpleCoords> = table.keys().cloned().collect();
            keys.sort();
            let mut next = table.clone();
            for k in keys {
                let mut cur = k.clone();
                loop {
                    for (x, y) in cur.iter_mut().zip(&rc) {
                        *x += y;
                    }
                    if cur.iter().zip(&target).any(|(x, t)| x > t) {
                        break;
                    }
                    *next.entry(cur.clone()).or_insert(0) += table[&k];
                }
            }
            table = next;
        }
        table.get(&target).copied().unwrap_or(0)
    }

    #[test]
    fn levi_table_examples() {
        let gl3 = Arc::new(RootDatum::new(Family::GL, 3).unwrap());
        let levi = LeviDatum::new(gl3, &[1]).unwrap();
        let t = PartitionTable::for_levi(&levi);
        assert_eq!(t.roots().len(), 2);
        assert_eq!(t.count(&Weight::zero(3)), 1);
        assert_eq!(t.count(&w(&[1, 1, -2])), 1);
        assert_eq!(t.count(&w(&[1, -1, 0])), 0);
    }

    #[test]
    fn matches_brute_force() {
        for (f, n) in [(Family::C, 2), (Family::B, 3), (Family::GL, 4), (Family::D, 4)] {
            let d = RootDatum::new(f, n).unwrap();
            let t = PartitionTable::full(&d);
            let roots = d.positive_roots().to_vec();
            for beta in [&d.rho().scaled(2), &d.highest_root(), &d.highest_root().scaled(2)] {
                let beta = beta.clone();
                assert_eq!(t.count(&beta), series(&d, &roots, &beta), "{f:?}{n} {beta}");
            }
        }
    }

    #[test]
    fn a2_closed_form() {
        // P(a α1 + b α2) = min(a, b) + 1 in type A2
        let gl3 = RootDatum::new(Family::GL, 3).unwrap();
        let t = PartitionTable::full(&gl3);
        for a in 0..6i64 {
            for b in 0..6i64 {
                let beta = w(&[a, b - a, -b]);
                assert_eq!(t.count(&beta), (a.min(b) + 1) as u128);
            }
        }
    }

    #[test]
    fn concurrent_queries_agree() {
        use rayon::prelude::*;
        let c3 = RootDatum::new(Family::C, 3).unwrap();
        let t = PartitionTable::full(&c3);
        let betas: Vec<Weight> = (0..40).map(|i| w(&[i % 5, (i / 5) % 4, i % 3])).collect();
        let par: Vec<u128> = betas.par_iter().map(|b| t.count(b)).collect();
        let fresh = PartitionTable::full(&c3);
        let seq: Vec<u128> = betas.iter().map(|b| fresh.count(b)).collect();
        assert_eq!(par, seq);
    }

    #[test]
    fn persistence_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let c3 = RootDatum::new(Family::C, 3).unwrap();
        let t = PartitionTable::full(&c3);
        let beta = w(&[4, 2, 2]);
        let v = t.count(&beta);
        t.save(dir.path()).unwrap();
        let again = PartitionTable::full(&c3);
        assert_eq!(again.load(dir.path()).unwrap(), 1);
        assert_eq!(again.memo_len(), 0);
        assert_eq!(again.count(&beta), v);
        let other = PartitionTable::full(&RootDatum::new(Family::B, 3).unwrap());
        assert_ne!(other.cache_key(), t.cache_key());
        assert_eq!(other.load(dir.path()).unwrap(), 0);
    }
}
