#ifndef LND_DERIVATION_HPP
#define LND_DERIVATION_HPP

#include <optional>
#include <string>

#include "lnd/groebner.hpp"
#include "lnd/ringmap.hpp"

namespace lnd {

// A derivation of a polynomial ring, determined by the images of the
// variables and extended to everything by linearity and the Leibniz rule.
class Derivation {
  public:
    static Derivation make(RingPtr ring, std::vector<Polynomial> images);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t var) const { return images_.at(var); }
    bool is_zero() const;

  private:
    Derivation(RingPtr ring, std::vector<Polynomial> images)
        : ring_(std::move(ring)), images_(std::move(images)) {}
    RingPtr ring_;
    std::vector<Polynomial> images_;
};

// D(p) = sum over variables of dp/dx_i * D(x_i).
Polynomial apply(const Derivation& D, const Polynomial& p);

// Least s with D^s(p) = 0 (0 for p = 0), or nullopt once s would exceed cap.
std::optional<std::uint64_t> nilpotency_index(const Derivation& D, const Polynomial& p,
                                              std::uint64_t cap);

// Witness that D is triangular, hence locally nilpotent: a variable order
// in which each image only involves strictly earlier variables, plus the
// per-variable nilpotency indices.
struct NilpotencyCertificate {
    std::vector<std::size_t> order;                // variable indices, kernel side first
    std::vector<std::uint64_t> variable_indices;   // least s with D^s(x) = 0, per variable

    std::uint64_t max_variable_index() const;
    // Valid for every polynomial of total degree <= d.
    std::uint64_t bound_for_degree(std::uint64_t d) const;
};

std::optional<NilpotencyCertificate> certify_triangular(const Derivation& D);

// exp(sD)(p) = sum s^i D^i(p)/i!, finite by nilpotency; the result lives in
// the ring extended by the fresh parameter variable. Throws CertificateError
// if the iteration outlives the certified bound (the certificate does not
// match D).
Polynomial exp_map(const Derivation& D, const NilpotencyCertificate& cert,
                   const std::string& parameter, const Polynomial& p);

bool kernel_membership(const Derivation& D, const Polynomial& p);

// The ideal generated by all variable images is the unit ideal.
bool fixed_point_free(const Derivation& D, const BuchbergerOptions& opts = {});

// An element of the localization: numerator / base^power, with base a
// designated kernel element; reduced so base does not divide the numerator
// while power > 0.
struct LocalizedPoly {
    Polynomial numerator;
    Polynomial base;
    std::uint32_t power = 0;

    LocalizedPoly reduced() const;
};

// The projection pi(p) = sum (-s/c)^i D^i(p)/i! onto ker(D)[1/c], where s is
// the slice variable and c = D(s) is a nonzero kernel element. pi fixes the
// kernel pointwise and kills s.
LocalizedPoly dixmier_map(const Derivation& D, const NilpotencyCertificate& cert,
                          const std::string& slice_var, const Polynomial& p);

enum class CheckStatus { pass, fail, skipped };

struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "");
    void skip(std::string name, std::string detail = "");
    const Check* find(const std::string& name) const;
    bool overall() const;  // every non-skipped check passed
};

// Machine certificate that ker(D) = k[candidates], for a triangular D and a
// designated candidate c in ker(D). Three checks:
//   1. every candidate is annihilated by D;
//   2. localized equality: the cleared projection of every variable under
//      the Dixmier map lies in k[candidates] (hence
//      k[candidates][1/c] = ker(D)[1/c]);
//   3. injectivity mod c: the relations of the candidates modulo c are
//      exactly the relations plus (tag of c), by double inclusion of
//      Groebner bases.
// Together with the standard fact that a subring A of B with A_c = B_c and
// A/cA -> B/cB injective equals B, these certify the presentation.
VerificationReport verify_kernel_presentation(const Derivation& D,
                                              const std::vector<Polynomial>& candidates,
                                              const Polynomial& c,
                                              const BuchbergerOptions& opts = {});

}  // namespace lnd

#endif
