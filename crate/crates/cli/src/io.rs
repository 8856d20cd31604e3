//! JSON schemas for the command-line surface. Output maps are ordered
//! (BTreeMap / fixed struct order) so identical inputs give byte-identical
//! output.

use anyhow::{anyhow, bail, Context, Result};
use mvt_core::poly::ideal::Ideal;
use mvt_core::poly::{parse_poly, MonomialOrder, PolyRing};
use mvt_core::preproj::QuiverModule;
use mvt_core::tableaux::{LusztigDatum, Tableau};
use mvt_core::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Debug, Serialize, Deserialize)]
pub struct TableauJson {
    pub rows: Vec<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DatumJson {
    pub m: usize,
    pub n: Vec<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    #[serde(default)]
    pub weights: BTreeMap<String, Vec<i64>>,
    pub gens: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub m: usize,
    pub dims: Vec<usize>,
    /// arrows keyed like "1>2", matrices of rational strings
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
    /// per-edge signs keyed like "1>2"; unlisted edges use the alternating
    /// default
    #[serde(default)]
    pub signs: BTreeMap<String, i64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BzJson {
    pub m: usize,
    /// interval values keyed "[a,b]"
    #[serde(rename = "M")]
    pub m_vals: BTreeMap<String, i64>,
}

pub fn tableau_from_json(v: &TableauJson) -> Result<Tableau> {
    Ok(Tableau::new(v.rows.clone())?)
}

pub fn datum_from_json(v: &DatumJson) -> Result<LusztigDatum> {
    Ok(LusztigDatum::new(v.m, v.n.clone())?)
}

pub fn ideal_from_json(v: &IdealJson) -> Result<(PolyRing, Ideal)> {
    let rank = v
        .weights
        .values()
        .map(|w| w.len())
        .max()
        .unwrap_or(0);
    let ring = if v.weights.is_empty() {
        PolyRing::new(v.vars.clone(), MonomialOrder::DegRevLex)
    } else {
        let weights = v
            .vars
            .iter()
            .map(|name| {
                v.weights
                    .get(name)
                    .cloned()
                    .ok_or_else(|| anyhow!("missing weight for variable {name}"))
            })
            .collect::<Result<Vec<_>>>()?;
        PolyRing::with_weights(v.vars.clone(), MonomialOrder::DegRevLex, weights, rank)
    };
    let gens = v
        .gens
        .iter()
        .map(|g| parse_poly(&ring, g).map_err(|e| anyhow!("{e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring.clone(), Ideal::new(ring, gens)))
}

pub fn ideal_to_json(ideal: &Ideal) -> IdealJson {
    let mut weights = BTreeMap::new();
    if !ideal.ring.weights.is_empty() {
        for (name, w) in ideal.ring.vars.iter().zip(&ideal.ring.weights) {
            weights.insert(name.clone(), w.clone());
        }
    }
    IdealJson {
        vars: ideal.ring.vars.clone(),
        weights,
        gens: ideal.gen_strings(),
    }
}

fn parse_edge(key: &str) -> Result<(usize, usize)> {
    let (a, b) = key
        .split_once('>')
        .ok_or_else(|| anyhow!("arrow key {key} is not of the form i>j"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

pub fn module_from_json(v: &ModuleJson) -> Result<QuiverModule> {
    let mut m = QuiverModule::new(v.m, v.dims.clone());
    for (key, sign) in &v.signs {
        let (i, j) = parse_edge(key)?;
        if sign.abs() != 1 {
            bail!("sign for {key} must be +-1");
        }
        m.signs.insert((i, j), *sign);
        m.signs.insert((j, i), -*sign);
    }
    for (key, mat) in &v.arrows {
        let (i, j) = parse_edge(key)?;
        if i.abs_diff(j) != 1 {
            bail!("arrow {key} is not between adjacent vertices");
        }
        let rows = mat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        Rat::from_str(s)
                            .with_context(|| format!("bad rational {s} in arrow {key}"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != v.dims[j - 1] || rows.iter().any(|r| r.len() != v.dims[i - 1]) {
            bail!("arrow {key} has the wrong shape");
        }
        m.set_arrow(i, j, rows);
    }
    m.check_preprojective()?;
    Ok(m)
}

pub fn bz_from_json(v: &BzJson) -> Result<mvt_core::polytopes::BZDatum> {
    let mut bz = mvt_core::polytopes::BZDatum::new(v.m);
    for (key, value) in &v.m_vals {
        let inner = key
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| anyhow!("bad interval key {key}"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| anyhow!("bad interval key {key}"))?;
        bz.set(a.trim().parse()?, b.trim().parse()?, *value);
    }
    Ok(bz)
}

pub fn bz_to_json(bz: &mvt_core::polytopes::BZDatum) -> BzJson {
    let mut m_vals = BTreeMap::new();
    for (&(a, b), &v) in &bz.vals {
        m_vals.insert(format!("[{a},{b}]"), v);
    }
    BzJson { m: bz.m, m_vals }
}

/// Provenance block attached to every output. Cache hits are not recorded so
/// output stays byte-identical across runs with warm or cold caches.
#[derive(Debug, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
    pub cache: CacheInfo,
}

#[derive(Debug, Serialize)]
pub struct CacheInfo {
    pub enabled: bool,
    pub dir: Option<String>,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance {
            tool: "mvt",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            primes: Vec::new(),
            seeds: Vec::new(),
            cache: CacheInfo { enabled: false, dir: None },
        }
    }
}
