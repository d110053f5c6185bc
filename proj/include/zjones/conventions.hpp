#pragma once

namespace zj {

// Sign of the per-chord rescaling kappa = kappa_sign/4. Flipping it is
// equivalent to h -> -h on every series built from the weight system; it
// exists so the acceptance suite can run a negative control.
struct Conventions {
  int kappa_sign = 1;
};

namespace frozen {

// jones_torus(2,3) = frame_shift(sigma(jones_habiro(Trefoil)), F) with:
inline constexpr bool kTrefoilTorusMirror = false;
inline constexpr int kTrefoilTorusFraming = 12;

// The Kauffman bracket oracle agrees with the Habiro trefoil without a mirror.
inline constexpr bool kBracketMirror = false;

// Sign in front of sum[W(X) - W(parallel)] in the Casimir recursion, fixed by the highest-weight oracle.
inline constexpr int kPairSign = -1;

}  // namespace frozen

// The Gaussian-integral torus formula comes out in framing 2mp.
inline constexpr int torus_native_framing(int m, int p) { return 2 * m * p; }

}  // namespace zj
