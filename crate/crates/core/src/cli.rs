//! Commands behind the `alg` binary. Each returns a [`RunReport`] that the
//! binary prints as JSON on stdout.
//!
//! Exit codes: 0 all checks passed, 1 a check failed or the input describes an
//! invalid algebra, 2 the input could not be read or parsed.

use std::path::Path;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::Element;
use crate::catalog::validate_semigroup;
use crate::error::AlgebraError;
use crate::json::{self, AlgebraSpec, ElementSpec, LoadedAlgebra, PolySpec, StarSpec};
use crate::linalg;
use crate::poly;
use crate::sample;
use crate::spectral::{self, DEFAULT_INVERT_TOL};
use crate::star::{self, StarKind, DEFAULT_STAR_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Default Hausdorff tolerance for `polymap`.
pub const DEFAULT_POLYMAP_TOL: f64 = 1e-7;
pub const DEFAULT_SAMPLES: usize = 200;

// thresholds used by `star`
const IDENTITY_FIXED_TOL: f64 = 1e-10;
const INVERSE_COMPAT_TOL: f64 = 1e-9;
const SPECTRUM_CONJ_TOL: f64 = 1e-8;
const ISOMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub residual: Option<f64>,
}

impl Check {
    fn new(name: &str, ok: bool, residual: impl Into<Option<f64>>) -> Self {
        Self { name: name.to_string(), ok, residual: residual.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub results: Value,
    pub checks: Vec<Check>,
    pub exit_code: i32,
}

impl RunReport {
    fn finish(command: Vec<String>, digest: String, results: Value, checks: Vec<Check>) -> Self {
        let exit_code = if checks.iter().all(|c| c.ok) { EXIT_OK } else { EXIT_CHECK_FAILED };
        Self { command, inputs_digest: digest, results, checks, exit_code }
    }

    fn failure(command: Vec<String>, digest: String, err: &CommandError) -> Self {
        Self {
            command,
            inputs_digest: digest,
            results: json!({ "error": err.message() }),
            checks: vec![Check::new(err.stage(), false, None)],
            exit_code: err.exit_code(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check for the human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!("{} (exit {})\n", self.command.join(" "), self.exit_code);
        for c in &self.checks {
            let status = if c.ok { "ok  " } else { "FAIL" };
            match c.residual {
                Some(r) => out.push_str(&format!("  [{status}] {} (residual {r:.3e})\n", c.name)),
                None => out.push_str(&format!("  [{status}] {}\n", c.name)),
            }
        }
        if let Some(err) = self.results.get("error") {
            out.push_str(&format!("  error: {}\n", err.as_str().unwrap_or_default()));
        }
        out
    }
}

#[derive(Debug)]
enum CommandError {
    Input(String),
    Invalid(AlgebraError),
}

impl CommandError {
    fn exit_code(&self) -> i32 {
        match self {
            CommandError::Input(_) => EXIT_INPUT_ERROR,
            CommandError::Invalid(_) => EXIT_CHECK_FAILED,
        }
    }

    fn stage(&self) -> &'static str {
        match self {
            CommandError::Input(_) => "input",
            CommandError::Invalid(_) => "algebra",
        }
    }

    fn message(&self) -> String {
        match self {
            CommandError::Input(m) => m.clone(),
            CommandError::Invalid(e) => e.to_string(),
        }
    }
}

impl From<AlgebraError> for CommandError {
    fn from(e: AlgebraError) -> Self {
        CommandError::Invalid(e)
    }
}

/// Errors that come from malformed user input rather than failed mathematics.
fn input_error(e: AlgebraError) -> CommandError {
    CommandError::Input(e.to_string())
}

struct Inputs {
    texts: Vec<(String, Vec<u8>)>,
}

impl Inputs {
    fn new() -> Self {
        Self { texts: Vec::new() }
    }

    fn read(&mut self, path: &Path) -> Result<String, CommandError> {
        let bytes =
            std::fs::read(path).map_err(|e| CommandError::Input(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CommandError::Input(format!("{} is not UTF-8", path.display())))?;
        self.texts.push((path.display().to_string(), bytes));
        Ok(text)
    }

    fn parse<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, CommandError> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| CommandError::Input(format!("cannot parse {}: {e}", path.display())))
    }

    /// SHA-256 over the file contents in the order they were read.
    fn digest(&self) -> String {
        let mut h = Sha256::new();
        for (_, bytes) in &self.texts {
            h.update((bytes.len() as u64).to_le_bytes());
            h.update(bytes);
        }
        hex::encode(h.finalize())
    }
}

fn load_algebra(inputs: &mut Inputs, path: &Path) -> Result<(AlgebraSpec, LoadedAlgebra), CommandError> {
    let spec: AlgebraSpec = inputs.parse(path)?;
    let loaded = spec.build()?;
    Ok((spec, loaded))
}

fn load_element(inputs: &mut Inputs, path: &Path, loaded: &LoadedAlgebra) -> Result<Element, CommandError> {
    let spec: ElementSpec = inputs.parse(path)?;
    spec.build(&loaded.algebra).map_err(input_error)
}

fn pair(z: &Complex64) -> Value {
    json!([z.re, z.im])
}

fn coeffs_json(x: &Element) -> Value {
    Value::Array(x.coeffs().iter().map(pair).collect())
}

fn run(command: Vec<String>, body: impl FnOnce(&mut Inputs) -> Result<(Value, Vec<Check>), CommandError>) -> RunReport {
    let mut inputs = Inputs::new();
    match body(&mut inputs) {
        Ok((results, checks)) => RunReport::finish(command, inputs.digest(), results, checks),
        Err(e) => RunReport::failure(command, inputs.digest(), &e),
    }
}

fn path_arg(p: &Path) -> String {
    p.display().to_string()
}

/// `alg check FILE`: associativity, identity and, for semigroup files, the
/// table verdicts.
pub fn cmd_check(algebra_file: &Path) -> RunReport {
    let command = vec!["alg".into(), "check".into(), path_arg(algebra_file)];
    run(command, |inputs| {
        let spec: AlgebraSpec = inputs.parse(algebra_file)?;
        let mut checks = Vec::new();
        let mut results = serde_json::Map::new();

        if let Some(table) = spec.semigroup_table() {
            let table = table.map_err(|e| match e {
                AlgebraError::IndexOutOfRange { .. } => input_error(e),
                other => CommandError::Invalid(other),
            })?;
            let report = validate_semigroup(&table);
            results.insert("semigroup".into(), serde_json::to_value(report).expect("serializable"));
            checks.push(Check::new("semigroup_associative", report.associative, None));
            checks.push(Check::new("semigroup_identity", report.has_identity, None));
            if !(report.associative && report.has_identity) {
                return Ok((Value::Object(results), checks));
            }
        }

        let loaded = spec.build()?;
        let a = &loaded.algebra;
        results.insert("dim".into(), json!(a.dim()));
        results.insert("labels".into(), json!(a.labels()));

        let tol = a.default_identity_tol();
        let assoc = a.check_associativity(tol);
        results.insert("associativity".into(), serde_json::to_value(assoc).expect("serializable"));
        checks.push(Check::new("associativity", assoc.ok, assoc.max_residual));

        match a.find_identity(tol) {
            Ok(id) => {
                results
                    .insert("identity".into(), json!({ "coeffs": coeffs_json(&id.element), "residual": id.residual }));
                checks.push(Check::new("identity", true, id.residual));
            }
            Err(AlgebraError::NoIdentity { residual }) => {
                results.insert("identity".into(), Value::Null);
                checks.push(Check::new("identity", false, residual));
            }
            Err(e) => return Err(e.into()),
        }
        results.insert("commutative".into(), json!(a.is_commutative(tol)));
        Ok((Value::Object(results), checks))
    })
}

/// `alg spectrum FILE --element E.json`.
pub fn cmd_spectrum(algebra_file: &Path, element_file: &Path) -> RunReport {
    let command =
        vec!["alg".into(), "spectrum".into(), path_arg(algebra_file), "--element".into(), path_arg(element_file)];
    run(command, |inputs| {
        let (_, loaded) = load_algebra(inputs, algebra_file)?;
        let x = load_element(inputs, element_file, &loaded)?;
        let a = &loaded.algebra;
        let sigma = spectral::spectrum(a, &x)?;
        let total: usize = sigma.multiplicities().iter().sum();
        let zero_in_spectrum = sigma.contains(Complex64::new(0.0, 0.0));
        let invertible = match spectral::invert(a, &x, DEFAULT_INVERT_TOL) {
            Ok(_) => true,
            Err(AlgebraError::NotInvertible { .. }) => false,
            Err(e) => return Err(e.into()),
        };
        let results = json!({
            "spectrum": sigma,
            "cluster_tol": sigma.cluster_tol(),
            "invertible": invertible,
        });
        let checks = vec![
            Check::new("multiplicities_sum_to_dim", total == a.dim(), None),
            Check::new("invertible_iff_zero_not_in_spectrum", invertible != zero_in_spectrum, None),
        ];
        Ok((results, checks))
    })
}

/// `alg polymap FILE --element E.json --poly P.json [--tol T]`.
pub fn cmd_polymap(algebra_file: &Path, element_file: &Path, poly_file: &Path, tol: f64) -> RunReport {
    let command = vec![
        "alg".into(),
        "polymap".into(),
        path_arg(algebra_file),
        "--element".into(),
        path_arg(element_file),
        "--poly".into(),
        path_arg(poly_file),
        "--tol".into(),
        format!("{tol:e}"),
    ];
    run(command, |inputs| {
        let (_, loaded) = load_algebra(inputs, algebra_file)?;
        let x = load_element(inputs, element_file, &loaded)?;
        let p = inputs.parse::<PolySpec>(poly_file)?.build();
        if p.is_zero() {
            return Err(input_error(AlgebraError::ZeroPolynomial));
        }
        let a = &loaded.algebra;
        let report = poly::spectral_mapping_check(a, &x, &p, tol)?;
        let factors = poly::invertible_via_roots(a, &x, &p, DEFAULT_INVERT_TOL)?;
        let px = poly::eval_element(&p, a, &x)?;
        let direct_invertible = match spectral::invert(a, &px, DEFAULT_INVERT_TOL) {
            Ok(_) => true,
            Err(AlgebraError::NotInvertible { .. }) => false,
            Err(e) => return Err(e.into()),
        };
        let results = json!({
            "polynomial": PolySpec::from_polynomial(&p),
            "p_of_x": coeffs_json(&px),
            "spectral_mapping": report,
            "factor_invertibility": factors,
            "p_of_x_invertible": direct_invertible,
        });
        let checks = vec![
            Check::new("spectral_mapping", report.ok, report.hausdorff),
            Check::new("factor_invertibility_agrees", factors.verdict == direct_invertible, None),
        ];
        Ok((results, checks))
    })
}

/// `alg star FILE --star S.json [--samples N] [--seed K]`.
pub fn cmd_star(algebra_file: &Path, star_file: &Path, samples: usize, seed: u64) -> RunReport {
    let command = vec![
        "alg".into(),
        "star".into(),
        path_arg(algebra_file),
        "--star".into(),
        path_arg(star_file),
        "--samples".into(),
        samples.to_string(),
        "--seed".into(),
        seed.to_string(),
    ];
    run(command, |inputs| {
        let (_, loaded) = load_algebra(inputs, algebra_file)?;
        let star_spec: StarSpec = inputs.parse(star_file)?;
        let s = star_spec.build(&loaded).map_err(|e| match e {
            AlgebraError::DimensionMismatch { .. } | AlgebraError::InvalidStructure(_) => input_error(e),
            other => CommandError::Invalid(other),
        })?;
        let a = &loaded.algebra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let cls = star::classify_star(a, &s, DEFAULT_STAR_TOL)?;
        let e = a.identity()?;
        let e_star_dev = (&s.apply(e)? - e).norm();

        let mut inverse_dev: f64 = 0.0;
        let mut inverse_cases = 0usize;
        let mut spectrum_dev: f64 = 0.0;
        for _ in 0..samples {
            let x = sample::element(a.dim(), &mut rng);
            let xs = s.apply(&x)?;
            let sx = spectral::spectrum(a, &x)?;
            let sxs = spectral::spectrum(a, &xs)?;
            let conj: Vec<Complex64> = sx.points().iter().map(|z| z.conj()).collect();
            spectrum_dev = spectrum_dev.max(linalg::hausdorff(&conj, sxs.points()));
            if let Ok(inv) = spectral::invert(a, &x, DEFAULT_INVERT_TOL) {
                let lhs = s.apply(&inv)?;
                if let Ok(rhs) = spectral::invert(a, &xs, DEFAULT_INVERT_TOL) {
                    inverse_dev = inverse_dev.max((&lhs - &rhs).norm() / lhs.norm().max(f64::MIN_POSITIVE));
                    inverse_cases += 1;
                } else {
                    inverse_dev = f64::INFINITY;
                }
            }
        }
        let iso = star::check_star_isometry(a, &s, samples.max(1), ISOMETRY_TOL, &mut rng)?;

        let results = json!({
            "classification": cls,
            "declared_kind": s.declared_kind(),
            "identity_fixed": { "deviation": e_star_dev },
            "inverse_compatibility": { "max_rel_deviation": inverse_dev, "cases": inverse_cases },
            "spectrum_conjugation": { "max_hausdorff": spectrum_dev, "cases": samples },
            "isometry": iso,
        });
        let class_residual =
            cls.involutive_deviation.max(cls.antimultiplicative_residual.min(cls.multiplicative_residual));
        let checks = vec![
            Check::new("classification", cls.kind != StarKind::Neither, class_residual),
            Check::new("identity_fixed", e_star_dev <= IDENTITY_FIXED_TOL, e_star_dev),
            Check::new("inverse_compatibility", inverse_dev <= INVERSE_COMPAT_TOL, inverse_dev),
            Check::new("spectrum_conjugation", spectrum_dev <= SPECTRUM_CONJ_TOL, spectrum_dev),
            Check::new("isometry", iso.ok, iso.max_ratio_dev),
        ];
        Ok((results, checks))
    })
}

/// JSON for a star structure's matrix, as accepted by `alg star`.
pub fn star_matrix_json(s: &star::StarStructure) -> StarSpec {
    json::StarSpec::from_matrix(s.matrix())
}
