use std::fmt;

/// The two-terminal genus parameters of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParameterProfile {
    pub g: usize,
    pub g_plus: usize,
    pub theta: usize,
    pub epsilon: usize,
    pub epsilon_plus: usize,
    pub g_a: usize,
    pub g_a_plus: usize,
}

impl ParameterProfile {
    /// Builds the full profile from the four independently computed values.
    /// Returns `None` if they cannot belong to one graph (θ outside {0, 1}
    /// or an alternation flag without genus to spend).
    pub fn from_parts(g: usize, g_plus: usize, epsilon: usize, epsilon_plus: usize) -> Option<Self> {
        if g_plus < g || g_plus - g > 1 || epsilon > 1 || epsilon_plus > 1 || epsilon > g || epsilon_plus > g_plus {
            return None;
        }
        Some(ParameterProfile {
            g,
            g_plus,
            theta: g_plus - g,
            epsilon,
            epsilon_plus,
            g_a: g - epsilon,
            g_a_plus: g_plus - epsilon_plus,
        })
    }

    /// Relations every profile must satisfy; returns the violated ones.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.g_plus != self.g + self.theta || self.theta > 1 {
            out.push("theta = g+ - g in {0,1}");
        }
        if self.g_a != self.g - self.epsilon || self.g_a_plus != self.g_plus - self.epsilon_plus {
            out.push("ga = g - eps, ga+ = g+ - eps+");
        }
        if self.g_plus > self.g_a + 1 {
            out.push("g+ <= ga + 1");
        }
        if self.g_a != self.g && self.g_a != self.g_a_plus {
            out.push("ga = g or ga = ga+");
        }
        if (self.epsilon == 1) != (self.theta == 0 && self.epsilon_plus == 1) {
            out.push("eps = 1 iff theta = 0 and eps+ = 1");
        }
        out
    }
}

impl fmt::Display for ParameterProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} g+={} theta={} eps={} eps+={} ga={} ga+={}",
            self.g, self.g_plus, self.theta, self.epsilon, self.epsilon_plus, self.g_a, self.g_a_plus
        )
    }
}

/// `θ(G1) + θ(G2) - ε⁺(G1)ε⁺(G2)`, always in `-1..=2`.
pub fn eta(p1: &ParameterProfile, p2: &ParameterProfile) -> i32 {
    (p1.theta + p2.theta) as i32 - (p1.epsilon_plus * p2.epsilon_plus) as i32
}
