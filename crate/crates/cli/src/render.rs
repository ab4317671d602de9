use g2lab::Q;
use num_traits::One;

/// Short human-readable text for a scalar.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for Q {
    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Render for f64 {
    fn render(&self) -> String {
        if *self == 0.0 {
            "0".into()
        } else {
            format!("{self:e}")
        }
    }
}
