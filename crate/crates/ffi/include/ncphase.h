#ifndef NCPHASE_H
#define NCPHASE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_ARGUMENT = 2,
  NC_STATUS_UNKNOWN_NAME = 3,
  NC_STATUS_DEGENERATE = 4,
  NC_STATUS_NON_FINITE = 5,
  NC_STATUS_BUFFER_TOO_SMALL = 6,
  NC_STATUS_INTERNAL = 7,
} NcStatus;

typedef enum NcClass {
  NC_CLASS_CANONICAL = 0,
  NC_CLASS_POSITION_NC = 1,
  NC_CLASS_MOMENTUM_NC = 2,
  NC_CLASS_FULLY_NC = 3,
} NcClass;

// A kinematical Lie algebra with exact structure constants.
typedef struct NcAlgebra NcAlgebra;

// A coadjoint orbit chart with its symplectic data.
typedef struct NcOrbit NcOrbit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Length in bytes of the last error message of this thread, without the NUL.
size_t nc_last_error_length(void);

// Copies the last error message, NUL-terminated and truncated to `len` bytes.
// Returns the number of bytes written, excluding the NUL.
//
// # Safety
// `buf` must be null or valid for `len` bytes.
size_t nc_last_error_message(char *buf, size_t len);

// Builds an algebra from a symbol ("G", "NH+", "S", ...), a variant
// ("isotropic", "anisotropic", "central_ext", "noncentral_ext") and the
// curvature constants as exact numbers ("1", "-3/2", "0.25").
//
// # Safety
// String arguments must be NUL-terminated; `out_algebra` must be valid for a write.
enum NcStatus nc_algebra_new(const char *name,
                             const char *variant,
                             const char *omega,
                             const char *kappa,
                             struct NcAlgebra **out_algebra);

// # Safety
// `algebra` must be null or come from `nc_algebra_new`, and not be used afterwards.
void nc_algebra_free(struct NcAlgebra *algebra);

// # Safety
// `algebra` must be a live handle; `dim` valid for a write.
enum NcStatus nc_algebra_dim(const struct NcAlgebra *algebra, size_t *dim);

// Number of basis triples i < j < k violating the Jacobi identity.
//
// # Safety
// `algebra` must be a live handle; `count` valid for a write.
enum NcStatus nc_algebra_jacobi_violations(const struct NcAlgebra *algebra, size_t *count);

// Structure constants C_ij^k as doubles, index (i*dim + j)*dim + k.
//
// # Safety
// `algebra` must be a live handle; `buf` valid for `len` doubles; `needed` null or valid.
enum NcStatus nc_algebra_structure_constants(const struct NcAlgebra *algebra,
                                             double *buf,
                                             size_t len,
                                             size_t *needed);

// Builds an orbit chart by name ("galilei", "para-galilei+", "newton-hooke-",
// "static", "carroll", "static-noncentral") with exact omega, kappa, mass and action.
//
// # Safety
// String arguments must be NUL-terminated; `out_orbit` must be valid for a write.
enum NcStatus nc_orbit_new(const char *name,
                           const char *omega,
                           const char *kappa,
                           const char *mass,
                           const char *action,
                           struct NcOrbit **out_orbit);

// # Safety
// `orbit` must be null or come from `nc_orbit_new`, and not be used afterwards.
void nc_orbit_free(struct NcOrbit *orbit);

// Number of chart coordinates.
//
// # Safety
// `orbit` must be a live handle; `dim` valid for a write.
enum NcStatus nc_orbit_dim(const struct NcOrbit *orbit, size_t *dim);

// Restricted Kirillov matrix, row-major.
//
// # Safety
// `orbit` must be a live handle; `buf` valid for `len` doubles; `needed` null or valid.
enum NcStatus nc_orbit_omega(const struct NcOrbit *orbit, double *buf, size_t len, size_t *needed);

// Inverse of the restricted Kirillov matrix, row-major.
//
// # Safety
// As for `nc_orbit_omega`.
enum NcStatus nc_orbit_theta(const struct NcOrbit *orbit, double *buf, size_t len, size_t *needed);

// Poisson tensor in the canonical chart coordinates, row-major.
//
// # Safety
// As for `nc_orbit_omega`.
enum NcStatus nc_orbit_brackets(const struct NcOrbit *orbit,
                                double *buf,
                                size_t len,
                                size_t *needed);

// G = {q1, q2} and F = {p1, p2}.
//
// # Safety
// `orbit` must be a live handle; `g` and `f` valid for writes.
enum NcStatus nc_orbit_fields(const struct NcOrbit *orbit, double *g, double *f);

// # Safety
// `orbit` must be a live handle; `class` valid for a write.
enum NcStatus nc_orbit_class(const struct NcOrbit *orbit, enum NcClass *class_);

// Integrates H = p^2/(2 mass) + k x^2/2 on the plane with {q1,q2} = g and
// {p1,p2} = f. Rows of (t, q1, q2, p1, p2) go to `buf`, five doubles each;
// `rows` receives the row count.
//
// # Safety
// `initial` must point to 4 doubles; `buf` valid for `len` doubles; `rows` valid for a write.
enum NcStatus nc_simulate_oscillator(double g,
                                     double f,
                                     double mass,
                                     double k,
                                     const double *initial,
                                     double t_end,
                                     double dt,
                                     double *buf,
                                     size_t len,
                                     size_t *rows);

// Applies a noncentral Static group element to an orbit state.
// `constants` = (m, mu, beta, kappa); `state` = (j, E, p1, p2, k1, k2, q1, q2, u1, u2);
// `element` = (theta, v1, v2, x1, x2, t, eta1, eta2, l1, l2, xi, phi, b, a).
// The result is written to `out_state` in the state layout.
//
// # Safety
// Pointers must be valid for 4, 10, 14 and 10 doubles.
enum NcStatus nc_static_realize(const double *constants,
                                const double *state,
                                const double *element,
                                double *out_state);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCPHASE_H */
