use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use qchar::Weight;

use crate::record::{CharacterRecord, Kind};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `QCHAR_CACHE_DIR`, else `qchar-cache` under the system temp dir.
    pub fn from_env() -> Self {
        match std::env::var_os("QCHAR_CACHE_DIR") {
            Some(dir) => Cache::new(dir),
            None => Cache::new(std::env::temp_dir().join("qchar-cache")),
        }
    }

    pub fn path(&self, kind: Kind, w: &Weight) -> PathBuf {
        self.dir.join(file_name(kind, w))
    }

    /// A missing or unreadable entry is a miss.
    pub fn get(&self, kind: Kind, w: &Weight) -> Option<CharacterRecord> {
        let text = fs::read_to_string(self.path(kind, w)).ok()?;
        let record: CharacterRecord = serde_json::from_str(&text).ok()?;
        (record.kind == kind && record.weight == *w).then_some(record)
    }

    pub fn put(&self, record: &CharacterRecord) -> io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(record.kind, &record.weight);
        write_atomic(&self.dir, &target, record.to_json().as_bytes())?;
        Ok(target)
    }
}

pub fn file_name(kind: Kind, w: &Weight) -> String {
    let entries: Vec<String> = w
        .doubled()
        .iter()
        .map(|e| e.to_string().replace('-', "m"))
        .collect();
    format!("{}_n{}_{}.json", kind.tag(), w.n(), entries.join("_"))
}

fn write_atomic(dir: &Path, target: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        target.file_name().unwrap().to_string_lossy(),
        std::process::id()
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn names() {
        let w: Weight = "3/2,-3/2".parse().unwrap();
        assert_eq!(file_name(Kind::Irreducible, &w), "irr_n2_3_m3.json");
        assert_eq!(
            file_name(Kind::Euler, &"2,0,-1".parse().unwrap()),
            "euler_n3_4_0_m2.json"
        );
    }

    #[test]
    fn round_trip_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let w: Weight = "3/2,-3/2".parse().unwrap();
        let ch = qchar::irreducible_character(&w).unwrap();
        let mut meta = BTreeMap::new();
        meta.insert("mode".to_string(), "test".into());
        let record = CharacterRecord::new(Kind::Irreducible, w.clone(), ch, meta);
        let path = cache.put(&record).unwrap();
        let written = fs::read(&path).unwrap();
        let back = cache.get(Kind::Irreducible, &w).unwrap();
        assert_eq!(back, record);
        assert_eq!(back.to_json().as_bytes(), &written[..]);
        assert!(cache.get(Kind::Euler, &w).is_none());
    }
}
