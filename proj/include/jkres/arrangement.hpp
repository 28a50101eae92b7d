#pragma once

#include <optional>
#include <vector>

#include "jkres/int_matrix.hpp"
#include "jkres/rational.hpp"
#include "jkres/rational_matrix.hpp"

namespace jkres {

// Integer covector; the arrangement owns validity (nonzero, primitive,
// pairwise non-proportional within an arrangement).
struct LinearForm {
    std::vector<long> coords;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coords == b.coords;
    }
};

// Index set into Arrangement::forms().  BasisSet is sorted increasing;
// OrderedBasis carries a significant order.
using BasisSet = std::vector<int>;
using OrderedBasis = std::vector<int>;

// A finite list of pairwise non-proportional primitive integer forms
// spanning rank-r space.  The list order is the total order used by
// every order-sensitive construction downstream.
class Arrangement {
public:
    Arrangement(int rank, std::vector<LinearForm> forms);

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(forms_.size()); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(int i) const { return forms_[i]; }

    // Primitive integer normals of the hyperplanes spanned by r-1
    // independent forms, sign-normalized (first nonzero entry > 0) and
    // deduplicated, in lexicographic order.  For rank 1 this is {(1)}.
    const std::vector<std::vector<long>>& wall_normals() const { return walls_; }

private:
    int rank_;
    std::vector<LinearForm> forms_;
    std::vector<std::vector<long>> walls_;
};

// All subsets of size r whose forms are linearly independent, as sorted
// index sets, in lexicographic order.
std::vector<BasisSet> enumerate_bases(const Arrangement& arr);

// Bases containing no broken circuit w.r.t. the list order: sigma is
// kept iff no form gamma lies in the span of the sigma-elements with
// strictly larger index.
std::vector<BasisSet> nbc_bases(const Arrangement& arr);

// Matrix whose j-th column is the form sigma[j].
IntMatrix basis_matrix(const Arrangement& arr, const std::vector<int>& sigma);

// t is regular iff <t, v> is not an integer for every wall normal v.
bool is_alcove_regular(const std::vector<Rational>& t, const Arrangement& arr);
// First wall normal with integral pairing, if any.
std::optional<std::vector<long>> violated_wall(const std::vector<Rational>& t,
                                               const Arrangement& arr);

// Coordinates of t in the basis sigma: solves sum_j c_j alpha_j = t.
std::vector<Rational> sigma_coordinates(const std::vector<Rational>& t,
                                        const Arrangement& arr, const BasisSet& sigma);

struct BoxReps {
    std::vector<long> floor_vector;                 // sum_j floor(c_j) alpha_j
    std::vector<std::vector<long>> representatives; // lattice points u with
                                                    // sigma-coords of t-u in [0,1)^r
    mpz_class index;                                // |det sigma| == representatives.size()
};

// Requires every sigma-coordinate of t to be non-integral; throws
// precondition_error otherwise.
BoxReps floor_and_box_reps(const std::vector<Rational>& t, const Arrangement& arr,
                           const BasisSet& sigma);

// The no-broken-circuit bases, each ordered increasingly, with the
// defining duality property verified computationally on construction.
struct DiagonalBasis {
    std::vector<OrderedBasis> members;
};

// Defined with the residue engine; throws verification_error if the
// pairing matrix of iterated residues against the members' simple
// fractions is not the identity.
DiagonalBasis diagonal_basis(const Arrangement& arr);

} // namespace jkres
