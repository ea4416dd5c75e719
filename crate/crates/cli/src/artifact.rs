//! Complex artifacts: a JSON file with vertex order, facets and the family
//! that produced them. Plain facet-text files are accepted as input too.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cobound::families::Family;
use cobound::PureComplex;
use serde::{Deserialize, Serialize};

use crate::manifest::{sha256_hex, ManifestBuilder, RunManifest};

#[derive(Debug, Serialize)]
pub struct ArtifactOut<'a> {
    pub manifest: RunManifest,
    pub family: Option<Family>,
    pub f_vector: Vec<usize>,
    pub facet_hash: String,
    pub vertices: &'a [String],
    pub facets: Vec<Vec<&'a str>>,
}

#[derive(Debug, Deserialize)]
struct ArtifactIn {
    family: Option<FamilyIn>,
    facet_hash: Option<String>,
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
struct FamilyIn {
    family: String,
    #[serde(flatten)]
    params: serde_json::Map<String, serde_json::Value>,
}

impl FamilyIn {
    fn resolve(&self) -> Result<Family> {
        let keys: &[&str] = match self.family.as_str() {
            "simplex" => &["n"],
            "partition" => &["n", "m"],
            "building" => &["n", "q"],
            "sphere" => &["d"],
            _ => &[],
        };
        let params = keys
            .iter()
            .map(|k| {
                self.params
                    .get(*k)
                    .and_then(|v| v.as_u64())
                    .with_context(|| format!("family parameter {k}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Family::parse(&self.family, &params)?)
    }
}

pub struct Loaded {
    pub complex: PureComplex,
    pub family: Option<Family>,
}

pub fn facet_hash(x: &PureComplex) -> String {
    sha256_hex(x.to_facet_text().as_bytes())
}

pub fn write(path: &Path, x: &PureComplex, family: Option<Family>, manifest: RunManifest) -> Result<()> {
    let out = ArtifactOut {
        manifest,
        family,
        f_vector: x.f_vector(),
        facet_hash: facet_hash(x),
        vertices: x.labels(),
        facets: x
            .faces(x.dim() as isize)
            .iter()
            .map(|f| f.vertices().iter().map(|&v| x.label(v)).collect())
            .collect(),
    };
    fs::write(path, serde_json::to_string_pretty(&out)?).with_context(|| format!("writing {}", path.display()))?;
    let text = path.with_extension("facets");
    fs::write(&text, x.to_facet_text()).with_context(|| format!("writing {}", text.display()))?;
    Ok(())
}

/// Reads an artifact or facet-text file and records its hash.
pub fn load(path: &Path, manifest: &mut ManifestBuilder) -> Result<Loaded> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    manifest.input(path, &bytes);
    let text = String::from_utf8(bytes).context("input is not UTF-8")?;
    if text.trim_start().starts_with('{') {
        let a: ArtifactIn = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let order: Vec<&str> = a.vertices.iter().map(String::as_str).collect();
        let complex = PureComplex::from_ordered_labels(&order, &a.facets)?;
        if let Some(h) = a.facet_hash {
            if h != facet_hash(&complex) {
                bail!(cobound::Error::Parse(format!(
                    "facet hash mismatch in {}",
                    path.display()
                )));
            }
        }
        let family = a.family.map(|f| f.resolve()).transpose()?;
        Ok(Loaded { complex, family })
    } else {
        Ok(Loaded {
            complex: PureComplex::parse_facet_text(&text)?,
            family: None,
        })
    }
}

/// A cochain file: one face per line as whitespace-separated vertex labels.
pub fn load_cochain(
    path: &Path,
    x: &PureComplex,
    k: usize,
    manifest: &mut ManifestBuilder,
) -> Result<cobound::BitChain> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    manifest.input(path, &bytes);
    let text = String::from_utf8(bytes).context("cochain file is not UTF-8")?;
    let mut faces = Vec::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let labels: Vec<&str> = line.split_whitespace().collect();
        let (dim, idx) = x.face_from_labels(&labels)?;
        if dim != k as isize {
            bail!(cobound::Error::DimensionMismatch {
                expected: format!("{k}-faces"),
                found: format!("{line:?} of dimension {dim}"),
            });
        }
        faces.push(idx);
    }
    Ok(cobound::BitChain::from_faces(x, k as isize, faces))
}
