//! On-disk cache of `D*_m` and its component labels.
//!
//! Layout (little endian): magic `GFDS`, version, `m`, vertex count, the
//! sorted vertex words, packed adjacency rows, the `R*` slot, component
//! member lists, and a trailing SHA-256 of everything before it.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::transfer::{Components, DStar, Transfer, DEFAULT_MAX_M};

pub const CACHE_ENV: &str = "GRIDFACTOR_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".cache/gridfactor";

const MAGIC: &[u8; 4] = b"GFDS";
const VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CacheStatus {
    Hit,
    Miss,
    Rebuilt,
    Disabled,
}

#[derive(Clone, Debug)]
pub struct CacheOptions {
    pub dir: Option<PathBuf>,
    pub enabled: bool,
    pub limit: usize,
}

impl Default for CacheOptions {
    fn default() -> Self {
        CacheOptions { dir: None, enabled: true, limit: DEFAULT_MAX_M }
    }
}

impl CacheOptions {
    pub fn disabled() -> Self {
        CacheOptions { enabled: false, ..Self::default() }
    }

    /// Flag value, then the environment variable, then the default path.
    pub fn resolved_dir(&self) -> PathBuf {
        self.dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
    }

    pub fn path_for(&self, m: usize) -> PathBuf {
        self.resolved_dir().join(format!("dstar-m{m:02}.bin"))
    }
}

/// Load the transfer data for `m` from the cache, or build and store it.
pub fn load_or_build(m: usize, opts: &CacheOptions) -> Result<(Transfer, CacheStatus)> {
    if !opts.enabled {
        return Ok((Transfer::build_with_limit(m, opts.limit)?, CacheStatus::Disabled));
    }
    crate::transfer::dstar::check_height(m, opts.limit)?;
    let path = opts.path_for(m);
    let status = match fs::read(&path) {
        Ok(bytes) => match decode(m, &bytes) {
            Ok((d, c)) => return Ok((Transfer::from_parts(d, c)?, CacheStatus::Hit)),
            Err(_) => CacheStatus::Rebuilt,
        },
        Err(_) => CacheStatus::Miss,
    };
    let t = Transfer::build_with_limit(m, opts.limit)?;
    // A cache that cannot be written is not an error for the caller.
    let _ = store(&path, &t);
    Ok((t, status))
}

pub fn store(path: &Path, t: &Transfer) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let bytes = encode(t);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, &bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn put(buf: &mut Vec<u8>, x: u32) {
    buf.extend_from_slice(&x.to_le_bytes());
}

pub fn encode(t: &Transfer) -> Vec<u8> {
    let d = &t.dstar;
    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    put(&mut buf, VERSION);
    put(&mut buf, d.m() as u32);
    put(&mut buf, d.vertex_count() as u32);
    for i in 0..d.vertex_count() {
        put(&mut buf, d.word_value(i));
    }
    for row in d.bit_rows() {
        buf.extend_from_slice(&row.to_le_bytes());
    }
    put(&mut buf, t.components.r_star() as u32);
    put(&mut buf, t.components.count() as u32);
    for ms in t.components.all() {
        put(&mut buf, ms.len() as u32);
        for &v in ms {
            put(&mut buf, v);
        }
    }
    let digest = Sha256::digest(&buf);
    buf.extend_from_slice(&digest);
    buf
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> std::result::Result<&[u8], String> {
        if self.pos + n > self.bytes.len() {
            return Err("truncated".into());
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u32(&mut self) -> std::result::Result<u32, String> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> std::result::Result<u64, String> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Decode and validate a cache record for height `m`.
pub fn decode(m: usize, bytes: &[u8]) -> Result<(DStar, Components)> {
    decode_inner(m, bytes).map_err(|reason| Error::Cache { path: PathBuf::new(), reason })
}

fn decode_inner(m: usize, bytes: &[u8]) -> std::result::Result<(DStar, Components), String> {
    if bytes.len() < 32 + 16 {
        return Err("truncated".into());
    }
    let (body, digest) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(body).as_slice() != digest {
        return Err("checksum mismatch".into());
    }
    let mut r = Reader { bytes: body, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err("bad magic".into());
    }
    if r.u32()? != VERSION {
        return Err("unsupported version".into());
    }
    let stored_m = r.u32()? as usize;
    if stored_m != m {
        return Err(format!("stored m = {stored_m}, wanted {m}"));
    }
    let n = r.u32()? as usize;
    if n != crate::transfer::expected_vertex_count(m) {
        return Err(format!("vertex count {n} is wrong for m = {m}"));
    }
    let words = (0..n).map(|_| r.u32()).collect::<std::result::Result<Vec<_>, _>>()?;
    if words.windows(2).any(|w| w[0] >= w[1]) || words.iter().any(|&w| w >> m != 0) {
        return Err("vertex list is not sorted".into());
    }
    let stride = n.div_ceil(64);
    let rows = (0..n * stride).map(|_| r.u64()).collect::<std::result::Result<Vec<_>, _>>()?;
    let r_star = r.u32()? as usize;
    let count = r.u32()? as usize;
    let mut members = Vec::with_capacity(count);
    for _ in 0..count {
        let len = r.u32()? as usize;
        let ms = (0..len).map(|_| r.u32()).collect::<std::result::Result<Vec<_>, _>>()?;
        if ms.iter().any(|&v| v as usize >= n) {
            return Err("component member out of range".into());
        }
        members.push(ms);
    }
    if r.pos != body.len() || r_star >= count {
        return Err("trailing or inconsistent data".into());
    }
    let d = DStar::from_bit_rows(m, words, &rows);
    Ok((d, Components::from_members(n, members, r_star)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let opts = CacheOptions { dir: Some(dir.path().to_path_buf()), ..CacheOptions::default() };
        let (t1, s1) = load_or_build(6, &opts).unwrap();
        assert_eq!(s1, CacheStatus::Miss);
        let (t2, s2) = load_or_build(6, &opts).unwrap();
        assert_eq!(s2, CacheStatus::Hit);
        assert_eq!(t1.dstar, t2.dstar);
        assert_eq!(t1.components, t2.components);

        let path = opts.path_for(6);
        let mut bytes = fs::read(&path).unwrap();
        bytes[20] ^= 1;
        fs::write(&path, &bytes).unwrap();
        let (t3, s3) = load_or_build(6, &opts).unwrap();
        assert_eq!(s3, CacheStatus::Rebuilt);
        assert_eq!(t3.dstar, t1.dstar);

        // A record for another height is rejected.
        fs::copy(opts.path_for(6), opts.path_for(5)).unwrap();
        let (_, s4) = load_or_build(5, &opts).unwrap();
        assert_eq!(s4, CacheStatus::Rebuilt);
    }
}
