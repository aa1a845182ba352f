//! On-disk spectrum cache. A `#` comment line records the schema version and
//! the parameters of the scan, followed by CSV records
//! `geometry,bc,lambda,multiplicity,branch` sorted by `lambda`.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CountingFunction, Eigenvalue, Geometry};
use crate::error::{Error, Result};
use crate::material::{Bc, Material};

pub const SCHEMA: &str = "elastic-weyl-spectrum/1";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CacheHeader {
    pub lambda: f64,
    pub mu: f64,
    pub lambda_max: f64,
}

#[derive(Serialize, Deserialize)]
struct Record {
    geometry: String,
    bc: String,
    lambda: f64,
    multiplicity: u32,
    branch: String,
}

fn cache_err(e: impl std::fmt::Display) -> Error {
    Error::Cache(e.to_string())
}

pub fn write_cache<W: Write>(c: &CountingFunction, m: &Material, mut w: W) -> Result<()> {
    writeln!(w, "# {SCHEMA} lambda={} mu={} lambda_max={}", m.lambda(), m.mu(), c.lambda_max).map_err(cache_err)?;
    let mut wr = csv::Writer::from_writer(w);
    let geometry = c.geometry.label();
    for e in &c.entries {
        wr.serialize(Record {
            geometry: geometry.clone(),
            bc: c.bc.to_string(),
            lambda: e.lambda,
            multiplicity: e.multiplicity,
            branch: e.branch.clone(),
        })
        .map_err(cache_err)?;
    }
    wr.flush().map_err(cache_err)
}

fn parse_header(line: &str) -> Result<CacheHeader> {
    let rest = line
        .strip_prefix('#')
        .map(str::trim)
        .and_then(|r| r.strip_prefix(SCHEMA))
        .ok_or_else(|| Error::Cache(format!("missing or unsupported schema line '{line}'")))?;
    let get = |key: &str| -> Result<f64> {
        rest.split_whitespace()
            .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
            .ok_or_else(|| Error::Cache(format!("header lacks '{key}'")))?
            .parse()
            .map_err(|_| Error::Cache(format!("bad value for '{key}'")))
    };
    Ok(CacheHeader { lambda: get("lambda")?, mu: get("mu")?, lambda_max: get("lambda_max")? })
}

pub fn read_cache<R: Read>(r: R) -> Result<(CacheHeader, CountingFunction)> {
    let mut br = BufReader::new(r);
    let mut first = String::new();
    br.read_line(&mut first).map_err(cache_err)?;
    let header = parse_header(first.trim_end())?;
    let mut rd = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(br);
    let mut geometry = None;
    let mut bc = None;
    let mut entries = Vec::new();
    for rec in rd.deserialize::<Record>() {
        let rec = rec.map_err(cache_err)?;
        let g = Geometry::parse(&rec.geometry)?;
        let b: Bc = rec.bc.parse().map_err(|_| Error::Cache(format!("unknown bc '{}'", rec.bc)))?;
        if geometry.get_or_insert(g) != &g || bc.get_or_insert(b) != &b {
            return Err(Error::Cache("mixed geometries or boundary conditions in one file".into()));
        }
        if rec.multiplicity == 0 || !rec.lambda.is_finite() {
            return Err(Error::Cache(format!("bad record at lambda = {}", rec.lambda)));
        }
        entries.push(Eigenvalue { lambda: rec.lambda, multiplicity: rec.multiplicity, branch: rec.branch });
    }
    let (geometry, bc) = match (geometry, bc) {
        (Some(g), Some(b)) => (g, b),
        _ => return Err(Error::Cache("no records".into())),
    };
    Ok((header, CountingFunction::new(geometry, bc, header.lambda_max, entries, vec![])))
}

pub fn save(c: &CountingFunction, m: &Material, path: &Path) -> Result<()> {
    let f = File::create(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    write_cache(c, m, std::io::BufWriter::new(f))
}

pub fn load(path: &Path) -> Result<(CacheHeader, CountingFunction)> {
    let f = File::open(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    read_cache(f)
}

/// Loads `path` if it holds the same problem scanned at least to `lambda_max`.
pub fn load_matching(path: &Path, m: &Material, geometry: Geometry, bc: Bc, lambda_max: f64) -> Result<Option<CountingFunction>> {
    if !path.exists() {
        return Ok(None);
    }
    let (h, c) = load(path)?;
    let same = h.lambda == m.lambda() && h.mu == m.mu() && c.geometry == geometry && c.bc == bc;
    Ok((same && h.lambda_max >= lambda_max).then_some(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CountingFunction {
        let e = |l: f64, m: u32, b: &str| Eigenvalue { lambda: l, multiplicity: m, branch: b.into() };
        CountingFunction::new(
            Geometry::Cylinder { h: 3.14159 },
            Bc::Free,
            50.0,
            vec![e(0.0, 3, "K=0:shear|K=0:pressure"), e(0.1 + 0.2, 4, "K=1:sh"), e(1.0 / 3.0, 8, "K=5:lamb-a")],
            vec![],
        )
    }

    #[test]
    fn roundtrip_is_exact() {
        let m = Material::new(2.0, 1.0, 3).unwrap();
        let c = sample();
        let mut buf = Vec::new();
        write_cache(&c, &m, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# elastic-weyl-spectrum/1 lambda=2 mu=1 lambda_max=50\n"));
        assert!(text.lines().nth(1).unwrap() == "geometry,bc,lambda,multiplicity,branch");
        let (h, back) = read_cache(&buf[..]).unwrap();
        assert_eq!(h, CacheHeader { lambda: 2.0, mu: 1.0, lambda_max: 50.0 });
        assert_eq!(back.entries, c.entries);
        assert_eq!(back.geometry, c.geometry);
        assert_eq!(back.count(0.34), c.count(0.34));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(read_cache(&b"geometry,bc,lambda,multiplicity,branch\n"[..]).is_err());
        let bad = "# elastic-weyl-spectrum/1 lambda=2 mu=1 lambda_max=5\ngeometry,bc,lambda,multiplicity,branch\ndisk,dir,1.0,0,k=1\n";
        assert!(read_cache(bad.as_bytes()).is_err());
        let mixed = "# elastic-weyl-spectrum/1 lambda=2 mu=1 lambda_max=5\ngeometry,bc,lambda,multiplicity,branch\ndisk,dir,1.0,1,k=1\ndisk,free,2.0,1,k=1\n";
        assert!(read_cache(mixed.as_bytes()).is_err());
    }
}
