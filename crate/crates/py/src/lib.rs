//! Python bindings: `Algebra` (one `Cl^(1/m)_d`), `Element`, and a handful
//! of free functions mirroring the command line tool.

use pyo3::exceptions::{PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gencliff::expr::{self, ExprError, Value};
use gencliff::groups::{self, EXP_TOL};
use gencliff::rep::GeneratorSet;
use gencliff::{spectral, AlgebraContext, AlgebraElement, ComplexMatrix, Error, C64};

fn lib_err(e: Error) -> PyErr {
    match e {
        Error::Singular { .. } | Error::SingularMatrix { .. } => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn expr_err(e: ExprError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows(a: &ComplexMatrix) -> Vec<Vec<C64>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a.get(i, j)).collect()).collect()
}

#[pyclass(name = "Algebra", module = "gencliff_py", frozen)]
struct PyAlgebra {
    ctx: AlgebraContext,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(m: u32, d: u32) -> PyResult<Self> {
        Ok(PyAlgebra {
            ctx: AlgebraContext::new(m, d).map_err(lib_err)?,
        })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn d(&self) -> u32 {
        self.ctx.d()
    }

    /// Number of basis monomials, `m^d`.
    #[getter]
    fn dim(&self) -> usize {
        self.ctx.dim()
    }

    /// Size of the minimal matrix representation.
    #[getter]
    fn rep_size(&self) -> usize {
        self.ctx.rep_size()
    }

    fn identity(&self) -> PyElement {
        AlgebraElement::identity(&self.ctx).into()
    }

    fn scalar(&self, value: C64) -> PyElement {
        AlgebraElement::scalar(&self.ctx, value).into()
    }

    /// `e_k`, 1-based.
    fn generator(&self, k: u32) -> PyResult<PyElement> {
        Ok(AlgebraElement::generator(&self.ctx, k).map_err(lib_err)?.into())
    }

    /// Element from `m^d` coefficients in linear-index order.
    fn element(&self, coeffs: Vec<C64>) -> PyResult<PyElement> {
        Ok(AlgebraElement::from_coefficients(&self.ctx, coeffs).map_err(lib_err)?.into())
    }

    /// Evaluates an expression; returns an `Element`, a complex number, a
    /// matrix as nested lists, or a charpoly dict.
    fn eval(&self, py: Python<'_>, source: &str) -> PyResult<Py<PyAny>> {
        let value = expr::eval_str(source, &self.ctx).map_err(expr_err)?;
        value_to_py(py, value)
    }

    fn unitary_basis(&self) -> Vec<PyElement> {
        groups::unitary_lie_basis(&self.ctx).elements.into_iter().map(Into::into).collect()
    }

    fn special_unitary_basis(&self) -> Vec<PyElement> {
        groups::special_unitary_lie_basis(&self.ctx)
            .elements
            .into_iter()
            .map(Into::into)
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(m={}, d={})", self.ctx.m(), self.ctx.d())
    }
}

fn value_to_py(py: Python<'_>, value: Value) -> PyResult<Py<PyAny>> {
    Ok(match value {
        Value::Element(u) => Py::new(py, PyElement::from(u))?.into_any(),
        Value::Scalar(c) => c.into_pyobject(py)?.into_any().unbind(),
        Value::Matrix(a) => rows(&a).into_pyobject(py)?.into_any().unbind(),
        Value::CharPoly(p) => {
            let dict = PyDict::new(py);
            dict.set_item("N", p.context().rep_size())?;
            dict.set_item("C", p.coefficients().to_vec())?;
            dict.set_item("det", p.determinant())?;
            dict.into_any().unbind()
        }
    })
}

#[pyclass(name = "Element", module = "gencliff_py", frozen)]
struct PyElement {
    inner: AlgebraElement,
}

impl From<AlgebraElement> for PyElement {
    fn from(inner: AlgebraElement) -> Self {
        PyElement { inner }
    }
}

enum Operand {
    Element(AlgebraElement),
    Scalar(C64),
}

fn operand(other: &Bound<'_, PyAny>) -> PyResult<Operand> {
    if let Ok(e) = other.extract::<PyRef<'_, PyElement>>() {
        return Ok(Operand::Element(e.inner.clone()));
    }
    other
        .extract::<C64>()
        .map(Operand::Scalar)
        .map_err(|_| PyTypeError::new_err("operand must be an Element or a number"))
}

#[pymethods]
impl PyElement {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(AlgebraElement::from_json(text).map_err(lib_err)?.into())
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.context().m()
    }

    #[getter]
    fn d(&self) -> u32 {
        self.inner.context().d()
    }

    #[getter]
    fn coeffs(&self) -> Vec<C64> {
        self.inner.coeffs().to_vec()
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(match operand(other)? {
            Operand::Element(v) => AlgebraElement::linear_combine(C64::new(1.0, 0.0), &self.inner, C64::new(1.0, 0.0), &v)
                .map_err(lib_err)?
                .into(),
            Operand::Scalar(c) => self.inner.add_scalar(c).into(),
        })
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(match operand(other)? {
            Operand::Element(v) => AlgebraElement::linear_combine(C64::new(1.0, 0.0), &self.inner, C64::new(-1.0, 0.0), &v)
                .map_err(lib_err)?
                .into(),
            Operand::Scalar(c) => self.inner.add_scalar(-c).into(),
        })
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(match operand(other)? {
            Operand::Element(v) => AlgebraElement::linear_combine(C64::new(1.0, 0.0), &v, C64::new(-1.0, 0.0), &self.inner)
                .map_err(lib_err)?
                .into(),
            Operand::Scalar(c) => self.inner.scale(C64::new(-1.0, 0.0)).add_scalar(c).into(),
        })
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(match operand(other)? {
            Operand::Element(v) => self.inner.multiply(&v).map_err(lib_err)?.into(),
            Operand::Scalar(c) => self.inner.scale(c).into(),
        })
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(match operand(other)? {
            Operand::Element(v) => v.multiply(&self.inner).map_err(lib_err)?.into(),
            Operand::Scalar(c) => self.inner.scale(c).into(),
        })
    }

    fn __pow__(&self, k: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyTypeError::new_err("modular power is not supported"));
        }
        Ok(self.inner.pow(k).into())
    }

    fn __neg__(&self) -> Self {
        self.inner.scale(C64::new(-1.0, 0.0)).into()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        match other.extract::<PyRef<'_, PyElement>>() {
            Ok(v) => self.inner == v.inner,
            Err(_) => false,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element(m={}, d={}, {})", self.m(), self.d(), self.inner)
    }

    /// Hermitian conjugate `Ū`.
    fn conj(&self) -> Self {
        self.inner.hermitian_conjugate().into()
    }

    /// `2⟨U⟩_0 - U`.
    fn underline(&self) -> Self {
        self.inner.underline().into()
    }

    fn scalar_part(&self) -> C64 {
        self.inner.scalar_part()
    }

    fn grade(&self, k: i64) -> PyResult<Self> {
        Ok(self.inner.grade_project(k).map_err(lib_err)?.into())
    }

    fn mod_grade(&self, r: i64) -> PyResult<Self> {
        Ok(self.inner.mod_grade_project(r).map_err(lib_err)?.into())
    }

    #[pyo3(signature = (times = 1))]
    fn grade_automorphism(&self, times: u32) -> Self {
        self.inner.grade_automorphism(times).into()
    }

    fn inner_product(&self, other: PyRef<'_, PyElement>) -> PyResult<C64> {
        self.inner.inner_product(&other.inner).map_err(lib_err)
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    fn trace(&self) -> C64 {
        spectral::trace(&self.inner)
    }

    fn det(&self) -> C64 {
        spectral::determinant(&self.inner)
    }

    fn adjugate(&self) -> PyResult<Self> {
        Ok(spectral::adjugate(&self.inner).map_err(lib_err)?.into())
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(spectral::inverse(&self.inner).map_err(lib_err)?.into())
    }

    /// Coefficients `C_1..C_N` with `det(λ - U) = λ^N - C_1 λ^{N-1} - ... - C_N`.
    fn charpoly(&self) -> Vec<C64> {
        spectral::faddeev_leverrier(&self.inner).coefficients().to_vec()
    }

    /// Matrix image in the minimal representation, as nested lists.
    fn matrix(&self) -> PyResult<Vec<Vec<C64>>> {
        let gens = GeneratorSet::new(self.inner.context()).map_err(lib_err)?;
        Ok(rows(&gens.represent(&self.inner).map_err(lib_err)?))
    }

    fn exp(&self) -> Self {
        groups::exp_element(&self.inner, EXP_TOL).into()
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn membership<'py>(&self, py: Python<'py>, tol: f64) -> PyResult<Bound<'py, PyDict>> {
        let mem = groups::membership(&self.inner, tol);
        let dict = PyDict::new(py);
        dict.set_item("unitary", mem.unitary)?;
        dict.set_item("special_unitary", mem.special_unitary)?;
        dict.set_item("anti_hermitian", mem.anti_hermitian)?;
        dict.set_item("su_algebra", mem.su_algebra)?;
        Ok(dict)
    }
}

/// `[x, y] = xy - yx`.
#[pyfunction]
fn commutator(x: PyRef<'_, PyElement>, y: PyRef<'_, PyElement>) -> PyResult<PyElement> {
    Ok(groups::commutator(&x.inner, &y.inner).map_err(lib_err)?.into())
}

#[pymodule]
fn gencliff_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(commutator, m)?)?;
    Ok(())
}
