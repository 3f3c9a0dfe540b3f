//! Wire format: complex numbers are `[re, im]`, complex matrices are
//! `[[z11, z12], [z21, z22]]`, real matrices `[[a11, a12], [a21, a22]]`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mat2::{Mat2C, Mat2R};

pub type JsonComplex = [f64; 2];
pub type JsonMatrix = [[JsonComplex; 2]; 2];
pub type JsonRealMatrix = [[f64; 2]; 2];

pub fn complex_to_json(z: Complex<f64>) -> JsonComplex {
    [z.re, z.im]
}

pub fn complex_from_json(z: &JsonComplex) -> Complex<f64> {
    Complex::new(z[0], z[1])
}

pub fn matrix_to_json(m: &Mat2C<f64>) -> JsonMatrix {
    [
        [complex_to_json(m.a11), complex_to_json(m.a12)],
        [complex_to_json(m.a21), complex_to_json(m.a22)],
    ]
}

pub fn matrix_from_json(m: &JsonMatrix) -> Result<Mat2C<f64>> {
    Mat2C::try_new(
        complex_from_json(&m[0][0]),
        complex_from_json(&m[0][1]),
        complex_from_json(&m[1][0]),
        complex_from_json(&m[1][1]),
    )
}

pub fn real_matrix_to_json(m: &Mat2R<f64>) -> JsonRealMatrix {
    m.rows()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorObject {
    pub error: ErrorBody,
}
