#ifndef WARING_WARING_HPP
#define WARING_WARING_HPP

// Umbrella header: exact real Waring rank machinery for binary forms.
//
//   rational.hpp    exact scalars (GMP rationals and integers)
//   unipoly.hpp     integer polynomials, Sturm sequences, root isolation
//   binary_form.hpp homogeneous binary forms over the rationals
//   qmatrix.hpp     exact linear algebra
//   resultant.hpp   resultants and discriminants
//   apolarity.hpp   apolar action, catalecticants, ideal generators
//   hyperbolic.hpp  real-rootedness certificates
//   pencil.hpp      hyperbolic members of two-dimensional pieces
//   rng.hpp         deterministic seeds, enumerators, digests
//   evidence.hpp    rigor levels and lower-bound evidence records
//   rank.hpp        complex and real rank computation with certificates
//   witness.hpp     inductive construction of forms of prescribed rank
//   decompose.hpp   power-sum decompositions from a rank witness
//   form_expr.hpp   parser for factored form expressions
//   json_io.hpp     certificate (de)serialization
//   verify.hpp      independent replay verification of certificates

#include "apolarity.hpp"
#include "binary_form.hpp"
#include "decompose.hpp"
#include "evidence.hpp"
#include "form_expr.hpp"
#include "hyperbolic.hpp"
#include "json_io.hpp"
#include "pencil.hpp"
#include "qmatrix.hpp"
#include "rank.hpp"
#include "rational.hpp"
#include "resultant.hpp"
#include "rng.hpp"
#include "unipoly.hpp"
#include "verify.hpp"
#include "witness.hpp"

#endif  // WARING_WARING_HPP
