//! Staged pipeline: computes every table for one or more dimensions, writes
//! deterministic JSON and DOT files, caches raw coproduct solutions, and
//! re-verifies emitted or bundled datasets.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::catalog;
use crate::coproducts::{raw_solution_set, solve_coproducts, RawSolutionSet};
use crate::enumerate::{catalog_classes, classify_algebras, enumerate_algebras, identify_algebra};
use crate::fixtures::{self, FixtureRow};
use crate::fourier::{fourier_transport, fourier_transport_computed, holonomy, FourierData, TransportArrow};
use crate::gf2::{Gf2Mat, Gf2Vec};
use crate::hopfdual::{dual_class, quiver_from, Census};
use crate::qtri::{enumerate_quasitriangular, QtClass};
use crate::repsearch::{
    decompose, dsl2_atoms, dual_rep, enumerate_reps, rep_equivalence_classes, regular_rep, spans_subrep,
    tensor_table, TensorTable, DSL2_ATOM_LABELS,
};
use crate::structure::{
    check_algebra, check_antipode, check_bialgebra, dualize_coalgebra, parse_tensor_hex, AlgebraSC,
    Bialgebra, CoalgebraSC, HopfAlgebra,
};

/// Version written into every emitted file.
pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the cache root.
pub const CACHE_ENV: &str = "GF2HOPF_CACHE";

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema: {0}")]
    Schema(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Algebras,
    Coproducts,
    Classify,
    Quiver,
    Fourier,
    Qtri,
    Reps,
    All,
}

impl Stage {
    fn emits(self, s: Stage) -> bool {
        self == Stage::All || self == s
    }
}

impl FromStr for Stage {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "algebras" => Self::Algebras,
            "coproducts" => Self::Coproducts,
            "classify" => Self::Classify,
            "quiver" => Self::Quiver,
            "fourier" => Self::Fourier,
            "qtri" => Self::Qtri,
            "reps" => Self::Reps,
            "all" => Self::All,
            _ => return Err(PipelineError::Usage(format!("unknown stage {s}"))),
        })
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format!("{self:?}").to_lowercase())
    }
}

/// Where dual-basis identifications come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Lexicographically first isomorphism onto the catalog table.
    Computed,
    /// The bundled dimension-4 Fourier table.
    Fixture,
}

impl FromStr for Mode {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "computed" => Ok(Self::Computed),
            "fixture" => Ok(Self::Fixture),
            _ => Err(PipelineError::Usage(format!("unknown mode {s}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub dims: Vec<usize>,
    pub stage: Stage,
    /// Restricts the coproducts stage to one catalog label.
    pub algebra: Option<String>,
    pub out: PathBuf,
    pub mode: Mode,
    pub jobs: Option<usize>,
    /// `None` disables the cache.
    pub cache: Option<PathBuf>,
}

impl RunConfig {
    #[must_use]
    pub fn new(dims: Vec<usize>, stage: Stage, out: impl Into<PathBuf>) -> Self {
        Self {
            dims,
            stage,
            algebra: None,
            out: out.into(),
            mode: Mode::Computed,
            jobs: None,
            cache: None,
        }
    }

    /// Cache root from the environment, falling back to `<out>/.cache`.
    #[must_use]
    pub fn default_cache(out: &Path) -> PathBuf {
        std::env::var_os(CACHE_ENV).map_or_else(|| out.join(".cache"), PathBuf::from)
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.dims.is_empty() {
            return Err(PipelineError::Usage("no dimension given".into()));
        }
        if let Some(d) = self.dims.iter().find(|d| !(1..=4).contains(*d)) {
            return Err(PipelineError::Usage(format!("dimension {d} outside 1..=4")));
        }
        if let Some(label) = &self.algebra {
            if self.stage != Stage::Coproducts {
                return Err(PipelineError::Usage("--algebra applies to the coproducts stage only".into()));
            }
            if let Some(d) = self.dims.iter().find(|&&d| catalog::entry(d, label).is_none()) {
                return Err(PipelineError::Usage(format!("no algebra {label} in dimension {d}")));
            }
        }
        if self.mode == Mode::Fixture && self.dims.iter().any(|&d| d != 4) {
            return Err(PipelineError::Usage("fixture mode needs --dim 4".into()));
        }
        if self.stage == Stage::Reps && self.dims.iter().any(|&d| d != 4) {
            return Err(PipelineError::Usage("reps stage needs --dim 4".into()));
        }
        Ok(())
    }
}

// ============================================================================
// Records
// ============================================================================

fn rows(m: &Gf2Mat) -> Vec<String> {
    m.to_strings()
}

fn bits(len: usize, v: u64) -> String {
    (0..len).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
}

fn parse_bits(s: &str) -> Result<u64, PipelineError> {
    s.chars().enumerate().try_fold(0u64, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(PipelineError::Schema(format!("bad bit string {s}"))),
    })
}

fn parse_rows(r: &[String]) -> Result<Gf2Mat, PipelineError> {
    let refs: Vec<&str> = r.iter().map(String::as_str).collect();
    Gf2Mat::from_strs(&refs).map_err(|e| PipelineError::Schema(e.to_string()))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraRecord {
    pub label: String,
    /// Product tensor in the catalog basis.
    pub product: String,
    pub unit: String,
    pub relations: String,
    pub orbit_size: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebrasFile {
    pub version: u32,
    pub dim: usize,
    pub tensors: usize,
    pub classes: Vec<AlgebraRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoproductRecord {
    pub coproduct: String,
    pub counit: String,
    /// Catalog label of the dual algebra.
    #[serde(rename = "type")]
    pub dual_type: String,
    pub antipode: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawFile {
    pub version: u32,
    pub dim: usize,
    pub algebra: String,
    pub product: String,
    pub unit: String,
    pub solutions: Vec<CoproductRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassRecord {
    pub id: usize,
    pub algebra: String,
    #[serde(rename = "type")]
    pub dual_type: String,
    pub members: Vec<usize>,
    pub product: String,
    pub unit: String,
    pub coproduct: String,
    pub counit: String,
    pub antipode: Option<Vec<String>>,
    pub cop_partner: usize,
    pub dual_class: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassesFile {
    pub version: u32,
    pub dim: usize,
    pub algebras: usize,
    pub bialgebras: usize,
    pub hopf: usize,
    pub classes: Vec<ClassRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FourierRecord {
    pub label: String,
    pub source: String,
    pub target: String,
    pub integral: String,
    pub f: Vec<String>,
    pub f_sharp: Vec<String>,
    pub identification: Vec<String>,
    pub transport: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HolonomyRecord {
    pub path: Vec<String>,
    pub matrix: Vec<String>,
    pub order: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FourierFile {
    pub version: u32,
    pub dim: usize,
    pub mode: String,
    pub arrows: Vec<FourierRecord>,
    pub holonomies: Vec<HolonomyRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RRecord {
    pub r: String,
    pub r_inv: String,
    pub q: String,
    pub klass: String,
    pub factorisable: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QtClassRecord {
    pub class: usize,
    pub algebra: String,
    #[serde(rename = "type")]
    pub dual_type: String,
    pub structures: Vec<RRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QtFile {
    pub version: u32,
    pub dim: usize,
    pub nontrivial_pairs: usize,
    pub classes: Vec<QtClassRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepCount {
    pub k: usize,
    pub raw: usize,
    pub classes: usize,
    /// Classes not equivalent to a direct sum of the four atoms.
    pub not_sums_of_atoms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepsFile {
    pub version: u32,
    pub algebra: String,
    pub atoms: Vec<(String, Vec<String>)>,
    pub counts: Vec<RepCount>,
    pub tensor: TensorTable,
    pub duals: Vec<(String, Option<Vec<String>>)>,
    pub regular: Option<Vec<String>>,
    pub invariant_lines: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Totals {
    pub algebras: usize,
    pub bialgebras: usize,
    pub hopf: usize,
    pub qt_pairs: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub version: u32,
    pub dim: usize,
    pub found: Totals,
    pub expected: Option<Totals>,
    pub matches: bool,
}

/// Reference census per dimension.
#[must_use]
pub fn expected_totals(n: usize) -> Option<Totals> {
    let (algebras, bialgebras, hopf, qt_pairs) = match n {
        2 => (3, 4, 3, 1),
        3 => (7, 24, 2, 0),
        4 => (25, 286, 20, 28),
        _ => return None,
    };
    Some(Totals {
        algebras,
        bialgebras,
        hopf,
        qt_pairs,
    })
}

// ============================================================================
// Cache
// ============================================================================

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: u32,
    sha256: String,
    /// `(coproduct hex, counit bits)` pairs.
    payload: String,
}

fn checksum(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn cache_path(root: &Path, n: usize, label: &str) -> PathBuf {
    root.join(format!("v{FORMAT_VERSION}")).join(format!("n{n}")).join(format!("raw_{label}.json"))
}

fn load_cached(root: &Path, a: &AlgebraSC, n: usize, label: &str) -> Option<RawSolutionSet> {
    let text = fs::read_to_string(cache_path(root, n, label)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    if entry.version != FORMAT_VERSION || checksum(&entry.payload) != entry.sha256 {
        return None;
    }
    let pairs: Vec<(String, String)> = serde_json::from_str(&entry.payload).ok()?;
    let found = pairs
        .iter()
        .map(|(c, e)| Some((parse_tensor_hex(c).ok()?, parse_bits(e).ok()?)))
        .collect::<Option<Vec<_>>>()?;
    raw_solution_set(a, &found).ok()
}

fn store_cached(root: &Path, n: usize, set: &RawSolutionSet) -> Result<(), PipelineError> {
    let pairs: Vec<(String, String)> = set
        .solutions
        .iter()
        .map(|s| (s.coalg.hex(), bits(n, s.coalg.eps_bits())))
        .collect();
    let payload = serde_json::to_string(&pairs)?;
    let entry = CacheEntry {
        version: FORMAT_VERSION,
        sha256: checksum(&payload),
        payload,
    };
    let path = cache_path(root, n, &set.algebra_label);
    fs::create_dir_all(path.parent().expect("cache path has a parent"))?;
    fs::write(path, serde_json::to_string(&entry)?)?;
    Ok(())
}

/// Raw solutions for one catalog algebra, through the cache when enabled.
pub fn raw_solutions(n: usize, label: &str, cache: Option<&Path>) -> Result<RawSolutionSet, PipelineError> {
    let a = catalog::entry(n, label)
        .ok_or_else(|| PipelineError::Usage(format!("no algebra {label} in dimension {n}")))?
        .table_form();
    if let Some(root) = cache {
        if let Some(set) = load_cached(root, &a, n, label) {
            return Ok(set);
        }
    }
    let set = solve_coproducts(&a);
    if let Some(root) = cache {
        store_cached(root, n, &set)?;
    }
    Ok(set)
}

// ============================================================================
// Stages
// ============================================================================

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<PathBuf, PipelineError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(&path, text)?;
    Ok(path)
}

fn algebras_file(n: usize) -> AlgebrasFile {
    let list = enumerate_algebras(n);
    let classes = classify_algebras(&list)
        .classes
        .iter()
        .map(|c| AlgebraRecord {
            label: c.label.clone(),
            product: c.table_form.hex(),
            unit: bits(n, c.table_form.unit_bits()),
            relations: c.relations_doc.clone(),
            orbit_size: c.orbit_size,
        })
        .collect();
    AlgebrasFile {
        version: FORMAT_VERSION,
        dim: n,
        tensors: list.len(),
        classes,
    }
}

#[must_use]
pub fn raw_file(n: usize, set: &RawSolutionSet) -> RawFile {
    RawFile {
        version: FORMAT_VERSION,
        dim: n,
        algebra: set.algebra_label.clone(),
        product: set.algebra.hex(),
        unit: bits(n, set.algebra.unit_bits()),
        solutions: set
            .solutions
            .iter()
            .map(|s| CoproductRecord {
                coproduct: s.coalg.hex(),
                counit: bits(n, s.coalg.eps_bits()),
                dual_type: s.coalg_type.clone(),
                antipode: s.antipode.as_ref().map(rows),
            })
            .collect(),
    }
}

fn classes_file(census: &Census) -> ClassesFile {
    let n = census.dim;
    let (algebras, bialgebras, hopf) = census.totals();
    ClassesFile {
        version: FORMAT_VERSION,
        dim: n,
        algebras,
        bialgebras,
        hopf,
        classes: census
            .classes
            .iter()
            .map(|c| ClassRecord {
                id: c.id,
                algebra: c.algebra_label.clone(),
                dual_type: c.coalgebra_type.clone(),
                members: c.members.clone(),
                product: c.algebra.hex(),
                unit: bits(n, c.algebra.unit_bits()),
                coproduct: c.representative.hex(),
                counit: bits(n, c.representative.eps_bits()),
                antipode: c.antipode.as_ref().map(rows),
                cop_partner: c.cop_partner,
                dual_class: dual_class(census, c.id),
            })
            .collect(),
    }
}

fn fourier_record(label: String, h: &HopfAlgebra, d: &FourierData) -> FourierRecord {
    let n = h.dim();
    FourierRecord {
        label,
        source: identify_algebra(h.alg()).to_string(),
        target: d.target.clone(),
        integral: bits(n, d.integral.i.bits()),
        f: rows(&d.f),
        f_sharp: rows(&d.f_sharp),
        identification: d.identification.as_ref().map(rows).unwrap_or_default(),
        transport: d.transport.as_ref().map(rows).unwrap_or_default(),
    }
}

/// Cycles through the fixture table whose holonomies are reported.
pub const HOLONOMY_PATHS: [&[&str]; 3] = [&["E.38", "P.3", "G.1"], &["E.5", "G.6", "L.6"], &["E.38", "P.3", "G.6", "L.6"]];

fn fixture_arrow(row: &FixtureRow) -> Result<TransportArrow, PipelineError> {
    let (source, target) = row
        .type_pair()
        .ok_or_else(|| PipelineError::Schema(format!("{}: no type pair", row.label)))?;
    let matrix = row.matrix("T").map_err(|e| PipelineError::Schema(e.to_string()))?;
    Ok(TransportArrow { source, target, matrix })
}

fn fourier_file(census: &Census, mode: Mode) -> Result<FourierFile, PipelineError> {
    let n = census.dim;
    let mut arrows = Vec::new();
    let mut holonomies = Vec::new();
    match mode {
        Mode::Computed => {
            for c in census.hopf_classes() {
                let h = HopfAlgebra::from_bialgebra(c.bialgebra()).expect("Hopf class");
                let d = fourier_transport_computed(&h).map_err(|e| PipelineError::Schema(e.to_string()))?;
                arrows.push(fourier_record(format!("class {}", c.id), &h, &d));
            }
        }
        Mode::Fixture => {
            let table = fixtures::n4_fourier();
            for row in &table {
                let b = row.bialgebra().map_err(|e| PipelineError::Schema(e.to_string()))?;
                let h = HopfAlgebra::from_bialgebra(b).ok_or_else(|| PipelineError::Schema(format!("{}: no antipode", row.label)))?;
                let y = row.identification().map_err(|e| PipelineError::Schema(e.to_string()))?;
                let d = fourier_transport(&h, &y).map_err(|e| PipelineError::Schema(e.to_string()))?;
                arrows.push(fourier_record(row.label.clone(), &h, &d));
            }
            for path in HOLONOMY_PATHS {
                let steps = path
                    .iter()
                    .map(|l| {
                        let row = table
                            .iter()
                            .find(|r| r.label == *l)
                            .ok_or_else(|| PipelineError::Schema(format!("missing row {l}")))?;
                        fixture_arrow(row)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let (m, order) = holonomy(&steps).map_err(|e| PipelineError::Schema(e.to_string()))?;
                holonomies.push(HolonomyRecord {
                    path: path.iter().map(|s| (*s).to_string()).collect(),
                    matrix: rows(&m),
                    order,
                });
            }
        }
    }
    Ok(FourierFile {
        version: FORMAT_VERSION,
        dim: n,
        mode: format!("{mode:?}").to_lowercase(),
        arrows,
        holonomies,
    })
}

fn square_hex(n: usize, v: u64) -> String {
    format!("{v:0w$x}", w = (n * n).div_ceil(4))
}

fn qt_file(census: &Census) -> QtFile {
    let n = census.dim;
    let classes: Vec<QtClassRecord> = census
        .hopf_classes()
        .map(|c| QtClassRecord {
            class: c.id,
            algebra: c.algebra_label.clone(),
            dual_type: c.coalgebra_type.clone(),
            structures: enumerate_quasitriangular(&c.bialgebra())
                .iter()
                .map(|q| RRecord {
                    r: square_hex(n, q.r.coeffs),
                    r_inv: square_hex(n, q.r_inv.coeffs),
                    q: square_hex(n, q.q.coeffs),
                    klass: format!("{:?}", q.klass).to_lowercase(),
                    factorisable: q.factorisable,
                })
                .collect(),
        })
        .collect();
    let nontrivial_pairs = classes
        .iter()
        .flat_map(|c| &c.structures)
        .filter(|r| r.klass != format!("{:?}", QtClass::Trivial).to_lowercase())
        .count();
    QtFile {
        version: FORMAT_VERSION,
        dim: n,
        nontrivial_pairs,
        classes,
    }
}

#[must_use]
pub fn reps_file() -> RepsFile {
    let (_, b) = fixtures::dsl2();
    let h = HopfAlgebra::from_bialgebra(b).expect("Hopf algebra");
    let atoms = dsl2_atoms();
    let labels = |d: Option<Vec<usize>>| d.map(|v| v.into_iter().map(|i| DSL2_ATOM_LABELS[i].to_string()).collect());
    let counts = (1..=3)
        .map(|k| {
            let raw = enumerate_reps(h.alg(), k);
            let classes = rep_equivalence_classes(&raw);
            RepCount {
                k,
                raw: raw.len(),
                classes: classes.len(),
                not_sums_of_atoms: classes.iter().filter(|c| decompose(&c.representative, &atoms).is_none()).count(),
            }
        })
        .collect();
    RepsFile {
        version: FORMAT_VERSION,
        algebra: "NF".into(),
        atoms: atoms
            .iter()
            .zip(DSL2_ATOM_LABELS)
            .map(|(a, l)| (l.to_string(), a.to_strings()))
            .collect(),
        counts,
        tensor: tensor_table(&h, &atoms, &DSL2_ATOM_LABELS),
        duals: atoms
            .iter()
            .zip(DSL2_ATOM_LABELS)
            .map(|(a, l)| (l.to_string(), labels(decompose(&dual_rep(&h, a), &atoms))))
            .collect(),
        regular: labels(decompose(&regular_rep(h.alg()), &atoms)),
        invariant_lines: spans_subrep(&atoms[2], 0b11, &atoms[0]) && spans_subrep(&atoms[3], 0b11, &atoms[1]),
    }
}

/// Files written and census results of one run.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub written: Vec<PathBuf>,
    pub summaries: Vec<Summary>,
}

impl RunReport {
    /// False when any census differs from the reference values.
    #[must_use]
    pub fn all_match(&self) -> bool {
        self.summaries.iter().all(|s| s.matches)
    }
}

fn census_for(n: usize, cache: Option<&Path>) -> Result<Census, PipelineError> {
    let algebra_count = classify_algebras(&enumerate_algebras(n)).classes.len();
    let raw = catalog_classes(n)
        .iter()
        .map(|c| raw_solutions(n, &c.label, cache))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Census::from_raw(n, algebra_count, raw))
}

fn run_dim(config: &RunConfig, n: usize, report: &mut RunReport) -> Result<(), PipelineError> {
    let dir = config.out.join(format!("n{n}"));
    let cache = config.cache.as_deref();
    let stage = config.stage;
    if stage.emits(Stage::Algebras) {
        report.written.push(write_json(&dir, "algebras.json", &algebras_file(n))?);
    }
    if stage == Stage::Coproducts {
        let labels: Vec<String> = match &config.algebra {
            Some(l) => vec![l.clone()],
            None => catalog_classes(n).iter().map(|c| c.label.clone()).collect(),
        };
        for l in labels {
            let set = raw_solutions(n, &l, cache)?;
            report.written.push(write_json(&dir, &format!("raw_{l}.json"), &raw_file(n, &set))?);
        }
        return Ok(());
    }
    if stage == Stage::Algebras || stage == Stage::Reps {
        if stage == Stage::Reps {
            report.written.push(write_json(&dir, "reps.json", &reps_file())?);
        }
        return Ok(());
    }
    let census = census_for(n, cache)?;
    if stage == Stage::All {
        for set in &census.raw {
            let name = format!("raw_{}.json", set.algebra_label);
            report.written.push(write_json(&dir, &name, &raw_file(n, set))?);
        }
    }
    if stage.emits(Stage::Classify) {
        report.written.push(write_json(&dir, "classes.json", &classes_file(&census))?);
    }
    if stage.emits(Stage::Quiver) {
        let q = quiver_from(n, &census.classes);
        report.written.push(write_json(&dir, "quiver.json", &q)?);
        let path = dir.join("quiver.dot");
        fs::write(&path, q.to_dot())?;
        report.written.push(path);
    }
    if stage.emits(Stage::Fourier) {
        report.written.push(write_json(&dir, "fourier.json", &fourier_file(&census, config.mode)?)?);
    }
    let mut qt_pairs = None;
    if stage.emits(Stage::Qtri) {
        let qt = qt_file(&census);
        qt_pairs = Some(qt.nontrivial_pairs);
        report.written.push(write_json(&dir, "qt.json", &qt)?);
    }
    if stage == Stage::All {
        if n == 4 {
            report.written.push(write_json(&dir, "reps.json", &reps_file())?);
        }
        let (algebras, bialgebras, hopf) = census.totals();
        let found = Totals {
            algebras,
            bialgebras,
            hopf,
            qt_pairs: qt_pairs.unwrap_or_default(),
        };
        let expected = expected_totals(n);
        let summary = Summary {
            version: FORMAT_VERSION,
            dim: n,
            matches: expected.as_ref().is_none_or(|e| *e == found),
            found,
            expected,
        };
        report.written.push(write_json(&dir, "summary.json", &summary)?);
        report.summaries.push(summary);
    }
    Ok(())
}

/// Runs the configured stages for every dimension.
pub fn run(config: &RunConfig) -> Result<RunReport, PipelineError> {
    config.validate()?;
    let work = || {
        let mut report = RunReport::default();
        for &n in &config.dims {
            run_dim(config, n, &mut report)?;
        }
        Ok(report)
    };
    match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| PipelineError::Usage(e.to_string()))?
            .install(work),
        None => work(),
    }
}

// ============================================================================
// Verification
// ============================================================================

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: VerifyReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn algebra_from(n: usize, product: &str, unit: &str) -> Result<AlgebraSC, PipelineError> {
    let v = parse_tensor_hex(product).map_err(|e| PipelineError::Schema(e.to_string()))?;
    Ok(AlgebraSC::new(n, v, Gf2Vec::from_bits(n, parse_bits(unit)?)))
}

fn coalgebra_from(n: usize, coproduct: &str, counit: &str) -> Result<CoalgebraSC, PipelineError> {
    let c = parse_tensor_hex(coproduct).map_err(|e| PipelineError::Schema(e.to_string()))?;
    Ok(CoalgebraSC::new(n, c, Gf2Vec::from_bits(n, parse_bits(counit)?)))
}

fn check_record(
    report: &mut VerifyReport,
    what: &str,
    b: &Bialgebra,
    dual_type: &str,
    antipode: Option<&Vec<String>>,
) -> Result<(), PipelineError> {
    let mut problems = Vec::new();
    if let Err(v) = check_bialgebra(b) {
        problems.push(v.to_string());
    } else {
        let t = identify_algebra(&dualize_coalgebra(&b.coalg));
        if t != dual_type {
            problems.push(format!("dual type {t}, recorded {dual_type}"));
        }
        if let Some(s) = antipode {
            if let Err(v) = check_antipode(b, &parse_rows(s)?) {
                problems.push(v.to_string());
            }
        }
    }
    report.record(problems.is_empty(), || format!("{what}: {}", problems.join("; ")));
    Ok(())
}

fn verify_value(v: &serde_json::Value, report: &mut VerifyReport) -> Result<(), PipelineError> {
    let version = v.get("version").and_then(serde_json::Value::as_u64);
    if version != Some(u64::from(FORMAT_VERSION)) {
        return Err(PipelineError::Schema("missing or unsupported version".into()));
    }
    if v.get("solutions").is_some() {
        let f: RawFile = serde_json::from_value(v.clone())?;
        let a = algebra_from(f.dim, &f.product, &f.unit)?;
        for (i, s) in f.solutions.iter().enumerate() {
            let b = Bialgebra::new(a, coalgebra_from(f.dim, &s.coproduct, &s.counit)?);
            check_record(report, &format!("{}.{}", f.algebra, i + 1), &b, &s.dual_type, s.antipode.as_ref())?;
        }
    } else if v.get("bialgebras").is_some() {
        let f: ClassesFile = serde_json::from_value(v.clone())?;
        for c in &f.classes {
            let a = algebra_from(f.dim, &c.product, &c.unit)?;
            let b = Bialgebra::new(a, coalgebra_from(f.dim, &c.coproduct, &c.counit)?);
            check_record(report, &format!("class {}", c.id), &b, &c.dual_type, c.antipode.as_ref())?;
        }
    } else if v.get("tensors").is_some() {
        let f: AlgebrasFile = serde_json::from_value(v.clone())?;
        for c in &f.classes {
            let a = algebra_from(f.dim, &c.product, &c.unit)?;
            let ok = check_algebra(&a).is_ok() && identify_algebra(&a) == c.label;
            report.record(ok, || format!("algebra {}", c.label));
        }
    } else {
        return Err(PipelineError::Schema("unrecognised dataset".into()));
    }
    Ok(())
}

fn verify_fixture_text(text: &str, report: &mut VerifyReport) -> Result<(), PipelineError> {
    // dimension from the number of coproduct fields on the first row
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| PipelineError::Schema("empty table".into()))?;
    let n = 1 + first
        .split('|')
        .filter_map(|p| p.split_once('='))
        .filter(|(k, _)| k.trim().len() == 2 && k.trim().starts_with('d'))
        .count();
    let table = fixtures::parse_rows(n, text).map_err(|e| PipelineError::Schema(e.to_string()))?;
    for row in &table {
        let b = row.bialgebra().map_err(|e| PipelineError::Schema(e.to_string()))?;
        let mut problems = Vec::new();
        if let Err(v) = check_bialgebra(&b) {
            problems.push(v.to_string());
        } else if row.fields.contains_key("T") {
            match HopfAlgebra::from_bialgebra(b)
                .zip(row.identification().ok())
                .and_then(|(h, y)| fourier_transport(&h, &y).ok())
            {
                Some(d) => {
                    for (key, m) in [("F", Some(d.f.clone())), ("T", d.transport.clone())] {
                        if row.matrix(key).ok() != m {
                            problems.push(format!("{key} differs"));
                        }
                    }
                    if row.vector01("I").ok() != Some(d.integral.i.bits()) {
                        problems.push("integral differs".into());
                    }
                }
                None => problems.push("no Fourier transport".into()),
            }
        }
        report.record(problems.is_empty(), || format!("{}: {}", row.label, problems.join("; ")));
    }
    Ok(())
}

/// Re-validates a dataset: an emitted JSON file, a directory of them, or a
/// bundled plain-text reference table.
pub fn verify(path: &Path) -> Result<VerifyReport, PipelineError> {
    let mut report = VerifyReport::default();
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = fs::read_dir(path)?
            .map(|e| e.map(|e| e.path()))
            .collect::<Result<_, _>>()?;
        entries.sort();
        for p in entries {
            let name = p.file_name().and_then(|s| s.to_str()).unwrap_or_default();
            let dataset = name.starts_with("raw_") || name == "classes.json" || name == "algebras.json" || name.ends_with(".txt");
            if (p.is_dir() && !name.starts_with('.')) || dataset {
                report.merge(verify(&p)?);
            }
        }
        return Ok(report);
    }
    let text = fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "txt") {
        verify_fixture_text(&text, &mut report)?;
    } else {
        verify_value(&serde_json::from_str(&text)?, &mut report)?;
    }
    Ok(report)
}

/// Writes the bundled reference tables as plain text for external reuse
/// and for `verify`.
pub fn export(out: &Path) -> Result<Vec<PathBuf>, PipelineError> {
    fs::create_dir_all(out)?;
    let mut written = Vec::new();
    for (name, text) in [
        ("n3_coproducts.txt", fixtures::N3_COPRODUCTS),
        ("n4_named.txt", fixtures::N4_NAMED),
        ("n4_fourier.txt", fixtures::N4_FOURIER),
    ] {
        let p = out.join(name);
        fs::write(&p, text)?;
        written.push(p);
    }
    Ok(written)
}
