//! Euclidean four-vectors over (w, x, y, z) and plain three-vectors.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;

/// A vector in Euclidean four-space. Components carry whatever unit the role
/// demands (meters for position, m/s for velocity, kg m/s for momentum); the
/// inner product is the ordinary positive-definite sum of products.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vector4 {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// One of the four coordinate axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    W,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::W, Axis::X, Axis::Y, Axis::Z];
    /// The three spatial axes, excluding w.
    pub const SPATIAL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::W => "w",
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl Vector4 {
    pub const ZERO: Vector4 = Vector4 {
        w: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Vector4 { w, x, y, z }
    }

    /// Euclidean inner product with another four-vector.
    pub fn dot(self, other: Vector4) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// The (x, y, z) part.
    pub fn spatial(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn from_parts(w: f64, spatial: Vec3) -> Self {
        Vector4::new(w, spatial.x, spatial.y, spatial.z)
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn component(self, axis: Axis) -> f64 {
        match axis {
            Axis::W => self.w,
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    /// Returns a copy with `delta` added to one component.
    pub fn offset(self, axis: Axis, delta: f64) -> Self {
        let mut out = self;
        match axis {
            Axis::W => out.w += delta,
            Axis::X => out.x += delta,
            Axis::Y => out.y += delta,
            Axis::Z => out.z += delta,
        }
        out
    }
}

/// The Euclidean inner product, validating that both inputs are finite.
pub fn euclid_inner(a: Vector4, b: Vector4) -> Result<f64, Error> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite {
            what: "inner-product operand",
        });
    }
    Ok(a.dot(b))
}

impl Add for Vector4 {
    type Output = Vector4;
    fn add(self, o: Vector4) -> Vector4 {
        Vector4::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vector4 {
    type Output = Vector4;
    fn sub(self, o: Vector4) -> Vector4 {
        Vector4::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vector4 {
    type Output = Vector4;
    fn mul(self, s: f64) -> Vector4 {
        Vector4::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vector4> for f64 {
    type Output = Vector4;
    fn mul(self, v: Vector4) -> Vector4 {
        v * self
    }
}

impl Div<f64> for Vector4 {
    type Output = Vector4;
    fn div(self, s: f64) -> Vector4 {
        Vector4::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl Neg for Vector4 {
    type Output = Vector4;
    fn neg(self) -> Vector4 {
        Vector4::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// A plain three-vector, used for velocities, three-momenta, and spatial
/// wave vectors.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}
