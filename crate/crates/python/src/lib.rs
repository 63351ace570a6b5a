//! Python bindings: the main types and operations of the verification
//! library as a `prelie_py` extension module.
//!
//! Rationals cross the boundary as strings (`"p"` or `"p/q"`); indices are
//! 1-based, matching the file formats.

use prelie_core::deformation::{
    cohomology_dims, deformation_report, is_nijenhuis, scan_nijenhuis, tilde_basis,
    trivial_deformation, Complex,
};
use prelie_core::exactla::{format_rat, parse_rat, Rat};
use prelie_core::files::{AlgebraFile, PhaseSpaceFile, TensorFile};
use prelie_core::phasespace::{
    build_phase_space, verify_phase_space, PhaseSpace as CorePhaseSpace,
};
use prelie_core::prelie::PreLieAlgebra as CorePreLie;
use prelie_core::smatrix::{
    is_s_matrix, pseudo_hessian, s_equation_tensor, SymTensor2 as CoreSymTensor,
};
use prelie_core::Error;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_vec(coords: Vec<String>, dim: usize) -> PyResult<Vec<Rat>> {
    if coords.len() != dim {
        return Err(PyValueError::new_err(format!(
            "expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    coords
        .iter()
        .map(|s| parse_rat(s).map_err(py_err))
        .collect()
}

fn render_vec(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

/// Symmetric 2-tensor with exact rational entries.
#[pyclass(name = "SymTensor", from_py_object)]
#[derive(Clone)]
struct PySymTensor {
    inner: CoreSymTensor,
}

#[pymethods]
impl PySymTensor {
    /// Build from a dense table of rational strings.
    #[new]
    fn new(entries: Vec<Vec<String>>) -> PyResult<Self> {
        let table: Result<Vec<Vec<Rat>>, Error> = entries
            .iter()
            .map(|row| row.iter().map(|s| parse_rat(s)).collect())
            .collect();
        let inner = CoreSymTensor::new(table.map_err(py_err)?).map_err(py_err)?;
        Ok(PySymTensor { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = TensorFile::parse(text)
            .and_then(|f| f.to_sym_tensor())
            .map_err(py_err)?;
        Ok(PySymTensor { inner })
    }

    fn to_json(&self) -> String {
        TensorFile::from_sym_tensor(&self.inner).to_json()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn entries(&self) -> Vec<Vec<String>> {
        self.inner
            .table()
            .iter()
            .map(|row| render_vec(row))
            .collect()
    }

    fn is_invertible(&self) -> bool {
        self.inner.is_invertible()
    }

    fn __repr__(&self) -> String {
        format!(
            "SymTensor(dim={}, entries={:?})",
            self.inner.dim(),
            self.entries()
        )
    }
}

/// Pre-Lie algebra given by structure constants; construction verifies the
/// pre-Lie identity and raises ValueError with the first failing triple.
#[pyclass(name = "PreLieAlgebra")]
struct PyPreLie {
    inner: CorePreLie,
}

#[pymethods]
impl PyPreLie {
    /// `products` lists nonzero structure constants as 1-based
    /// `(i, j, k, coefficient)` tuples: e_i · e_j has coefficient c on e_k.
    #[new]
    fn new(dim: usize, products: Vec<(usize, usize, usize, String)>) -> PyResult<Self> {
        let mut cube = prelie_core::prelie::zero_cube(dim);
        for (i, j, k, c) in &products {
            if *i == 0 || *i > dim || *j == 0 || *j > dim || *k == 0 || *k > dim {
                return Err(PyValueError::new_err(format!(
                    "index ({i},{j},{k}) out of range 1..={dim}"
                )));
            }
            cube[i - 1][j - 1][k - 1] += parse_rat(c).map_err(py_err)?;
        }
        Ok(PyPreLie {
            inner: CorePreLie::new(cube).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = AlgebraFile::parse(text).map_err(py_err)?;
        if file.kind != "pre-lie" {
            return Err(PyValueError::new_err("expected a pre-lie algebra file"));
        }
        let cube = file.to_cube().map_err(py_err)?;
        Ok(PyPreLie {
            inner: CorePreLie::new(cube).map_err(py_err)?,
        })
    }

    fn to_json(&self) -> String {
        AlgebraFile::from_cube(self.inner.cube(), "pre-lie").to_json()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Coordinates of e_i · e_j (1-based).
    fn product(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        if i == 0 || i > n || j == 0 || j > n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(render_vec(&self.inner.product_basis(i - 1, j - 1)))
    }

    fn is_s_matrix(&self, r: &PySymTensor) -> PyResult<bool> {
        Ok(is_s_matrix(&self.inner, &r.inner).map_err(py_err)?.pass)
    }

    /// Rendered S-equation residual `[r,r]`, e.g. `-(e1∧e2)⊗e2`.
    fn s_equation_residual(&self, r: &PySymTensor) -> PyResult<String> {
        Ok(s_equation_tensor(&self.inner, &r.inner)
            .map_err(py_err)?
            .render())
    }

    /// `dim H^k` for k = 1..=kmax; subcomplex=True gives the s-matrix
    /// cohomology, False the full operator complex.
    #[pyo3(signature = (r, kmax, subcomplex = true))]
    fn cohomology_dims(
        &self,
        r: &PySymTensor,
        kmax: usize,
        subcomplex: bool,
    ) -> PyResult<Vec<usize>> {
        let which = if subcomplex {
            Complex::Subcomplex
        } else {
            Complex::Full
        };
        cohomology_dims(&self.inner, &r.inner, kmax, which).map_err(py_err)
    }

    /// Dimension of the degree-k subcomplex space.
    fn subcomplex_dim(&self, r: &PySymTensor, k: usize) -> PyResult<usize> {
        Ok(tilde_basis(&self.inner, &r.inner, k).map_err(py_err)?.len())
    }

    /// Pseudo-Hessian form of an invertible s-matrix as a dense table.
    fn pseudo_hessian(&self, r: &PySymTensor) -> PyResult<Vec<Vec<String>>> {
        let form = pseudo_hessian(&self.inner, &r.inner).map_err(py_err)?;
        Ok((0..form.dim)
            .map(|i| {
                (0..form.dim)
                    .map(|j| format_rat(&form.matrix[(i, j)]))
                    .collect()
            })
            .collect())
    }

    fn is_nijenhuis(&self, r: &PySymTensor, x: Vec<String>) -> PyResult<bool> {
        let v = parse_vec(x, self.inner.dim())?;
        Ok(is_nijenhuis(&self.inner, &r.inner, &v)
            .map_err(py_err)?
            .pass)
    }

    /// Scan small Nijenhuis candidates; returns the passing vectors.
    fn nijenhuis_elements(&self, r: &PySymTensor) -> PyResult<Vec<Vec<String>>> {
        let found = scan_nijenhuis(&self.inner, &r.inner).map_err(py_err)?;
        Ok(found.iter().map(|v| render_vec(v)).collect())
    }

    /// `(is_two_cocycle, is_full_deformation, cohomology_class)` for a
    /// deformation direction κ.
    fn deformation_report(
        &self,
        r: &PySymTensor,
        kappa: &PySymTensor,
    ) -> PyResult<(bool, bool, Option<Vec<String>>)> {
        let rep = deformation_report(&self.inner, &r.inner, &kappa.inner).map_err(py_err)?;
        Ok((
            rep.is_two_cocycle,
            rep.is_full_deformation,
            rep.cohomology_class.as_deref().map(render_vec),
        ))
    }

    /// Coefficients of the trivial deformation `r + t⟦r,x⟧` of a Nijenhuis
    /// element, as `(degree, tensor)` pairs.
    fn trivial_deformation(
        &self,
        r: &PySymTensor,
        x: Vec<String>,
    ) -> PyResult<Vec<(usize, PySymTensor)>> {
        let v = parse_vec(x, self.inner.dim())?;
        let rt = trivial_deformation(&self.inner, &r.inner, &v).map_err(py_err)?;
        Ok(rt
            .iter()
            .map(|(d, c)| (d, PySymTensor { inner: c.clone() }))
            .collect())
    }

    fn build_phase_space(&self, r: &PySymTensor) -> PyResult<PyPhaseSpace> {
        let ps = build_phase_space(&self.inner, &r.inner).map_err(py_err)?;
        Ok(PyPhaseSpace { inner: ps })
    }

    fn __repr__(&self) -> String {
        format!("PreLieAlgebra(dim={})", self.inner.dim())
    }
}

/// Phase space on `g ⊕ g*` (primal block first, dual block second).
#[pyclass(name = "PhaseSpace")]
struct PyPhaseSpace {
    inner: CorePhaseSpace,
}

#[pymethods]
impl PyPhaseSpace {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn split(&self) -> usize {
        self.inner.base_dim()
    }

    /// Coordinates of the bracket of basis elements i, j (1-based over the
    /// 2n basis).
    fn bracket(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        if i == 0 || i > n || j == 0 || j > n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(render_vec(&self.inner.bracket_basis(i - 1, j - 1)))
    }

    fn omega(&self) -> Vec<Vec<String>> {
        let n = self.inner.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| format_rat(&self.inner.omega_matrix()[(i, j)]))
                    .collect()
            })
            .collect()
    }

    fn label(&self, i: usize) -> PyResult<String> {
        if i == 0 || i > self.inner.dim() {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(self.inner.label(i - 1))
    }

    fn verify(&self) -> bool {
        verify_phase_space(&self.inner).pass
    }

    fn to_json(&self) -> String {
        PhaseSpaceFile::from_phase_space(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "PhaseSpace(dim={}, split={})",
            self.inner.dim(),
            self.inner.base_dim()
        )
    }
}

#[pymodule]
fn prelie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPreLie>()?;
    m.add_class::<PySymTensor>()?;
    m.add_class::<PyPhaseSpace>()?;
    Ok(())
}
