//! Machine-readable results and their human rendering.

use std::io::{self, Write};

use distpf_core::{
    BigRational, Citation, DeltaSum, ExactScalar, OriginValue, PseudoFunction, RadialSeries,
    Resonance, Root, Scalar, Verdict,
};
use serde::{Deserialize, Serialize};

use crate::config::Mode;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub label: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualRow {
    pub fn new(label: String, value: f64, tolerance: f64) -> Self {
        Self {
            label,
            value,
            tolerance,
            pass: value <= tolerance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CitationEntry {
    pub id: Citation,
    pub formula: String,
}

impl From<Citation> for CitationEntry {
    fn from(id: Citation) -> Self {
        Self {
            id,
            formula: id.formula().to_string(),
        }
    }
}

/// One result document. `pf_part` and `delta_terms` hold the distribution the
/// command computed: `ΔPf.f` for `laplacian`/`verify`, and `Pf.Ψ` with its
/// delta source for `solve`/`classify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Report<T: Scalar> {
    pub command: String,
    pub mode: Mode,
    pub root: Option<Root>,
    pub pf_part: Option<PseudoFunction<T>>,
    pub delta_terms: DeltaSum<T::Weight>,
    pub verdict: Option<Verdict<T>>,
    pub citations: Vec<CitationEntry>,
    pub residuals: Vec<ResidualRow>,
    /// `u(r)` from the Frobenius recurrence.
    pub series: Option<RadialSeries<T>>,
    pub resonance: Option<Resonance>,
    /// Order at which the recurrence needs a logarithm.
    pub obstruction: Option<usize>,
}

impl<T: Scalar> Report<T> {
    pub fn new(command: &str, mode: Mode) -> Self {
        Self {
            command: command.to_string(),
            mode,
            root: None,
            pf_part: None,
            delta_terms: DeltaSum::new(),
            verdict: None,
            citations: Vec::new(),
            residuals: Vec::new(),
            series: None,
            resonance: None,
            obstruction: None,
        }
    }

    pub fn failed_residuals(&self) -> usize {
        self.residuals.iter().filter(|r| !r.pass).count()
    }

    pub fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        match self.root {
            Some(root) => writeln!(
                out,
                "{} ({} root)",
                self.command,
                format!("{root:?}").to_lowercase()
            )?,
            None => writeln!(out, "{}", self.command)?,
        }
        if let Some(k) = self.obstruction {
            writeln!(
                out,
                "  log obstruction at order {k}: no power-series solution"
            )?;
        }
        if let Some(u) = &self.series {
            writeln!(out, "  u(r) = {u}")?;
            for (k, a) in u.coeffs().iter().enumerate() {
                writeln!(out, "    a_{k} = {a}")?;
            }
        }
        match self.resonance {
            Some(Resonance::FreeParameterSetToZero(k)) => {
                writeln!(out, "  resonance at order {k}: free coefficient set to 0")?
            }
            Some(Resonance::None) => writeln!(out, "  resonance: none")?,
            None => {}
        }
        if let Some(pf) = &self.pf_part {
            writeln!(out, "  Pf part: {pf}")?;
        }
        writeln!(out, "  delta terms: {}", self.delta_terms)?;
        for t in self.delta_terms.terms() {
            writeln!(
                out,
                "    ℓ={} μ={} p={}: {}",
                t.ell(),
                t.mu(),
                t.p(),
                t.coefficient()
            )?;
        }
        if let Some(v) = &self.verdict {
            render_verdict(v, out)?;
        }
        if !self.citations.is_empty() {
            writeln!(out, "  satisfies:")?;
            for c in &self.citations {
                writeln!(out, "    {}", c.formula)?;
            }
        }
        if !self.residuals.is_empty() {
            let worst = self.residuals.iter().map(|r| r.value).fold(0.0, f64::max);
            writeln!(
                out,
                "  residuals: {} rows, max {worst:.3e}, {} above tolerance",
                self.residuals.len(),
                self.failed_residuals()
            )?;
            for r in &self.residuals {
                let mark = if r.pass { "ok  " } else { "FAIL" };
                writeln!(out, "    {mark} {:.3e}  {}", r.value, r.label)?;
            }
        }
        Ok(())
    }
}

fn render_verdict<T: Scalar>(v: &Verdict<T>, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "  verdict: {}", v.kind)?;
    writeln!(out, "  source: {}", v.delta_source)?;
    // The s-wave source is proportional to u(0).
    if let (OriginValue::Value(u0), 0) = (&v.u_at_origin, v.angular.ell()) {
        if !u0.is_zero() {
            if let Some(t) = v.delta_source.terms().first() {
                let per_u0 = T::scale_weight(t.coefficient(), &(T::one() / u0.clone()));
                writeln!(out, "  source = ({per_u0})·u(0)·δ")?;
            }
        }
    }
    if !v.radial_source.is_empty() {
        writeln!(out, "  radial source: {}", v.radial_source)?;
    }
    writeln!(out, "  u(0) = {}", v.u_at_origin)?;
    writeln!(
        out,
        "  boundary condition u(0) = 0: {}",
        if v.boundary_condition_met {
            "met"
        } else {
            "not met"
        }
    )?;
    writeln!(
        out,
        "  square-integrable at the origin: {}",
        if v.normalizable { "yes" } else { "no" }
    )?;
    Ok(())
}

/// One row of the `coeffs` table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub p: u64,
    pub c: ExactScalar,
    pub l: ExactScalar,
    #[serde(with = "distpf_core::scalar::wire")]
    pub b: BigRational,
    pub c_float: f64,
    pub l_float: f64,
    pub b_float: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffTable {
    pub command: String,
    pub ell: u32,
    pub rows: Vec<CoeffRow>,
}

impl CoeffTable {
    pub fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "coeffs (ℓ = {})", self.ell)?;
        writeln!(
            out,
            "  {:>3}  {:<28} {:<28} {:<12}",
            "p", "C_p", "L_p", "B_{ℓ,p}"
        )?;
        for r in &self.rows {
            writeln!(
                out,
                "  {:>3}  {:<28} {:<28} {:<12}",
                r.p,
                r.c.to_string(),
                r.l.to_string(),
                r.b.to_string()
            )?;
            writeln!(
                out,
                "       {:<28.15e} {:<28.15e} {:<12.6}",
                r.c_float, r.l_float, r.b_float
            )?;
        }
        Ok(())
    }
}
