/* C interface to the nary library. Handles are opaque; every call that can
 * fail returns a status and leaves a message for nary_last_error(). Strings
 * returned through char** are owned by the caller (nary_string_free). */
#ifndef NARY_H
#define NARY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nary_algebra nary_algebra;
typedef struct nary_tensor nary_tensor;

typedef enum {
  NARY_OK = 0,
  NARY_FAIL = 1,       /* a requested check did not pass */
  NARY_EINPUT = 2,     /* parse error, bad parameter, unsupported request */
  NARY_EINTERNAL = 3
} nary_status;

/* Message for the last non-OK status on this thread ("" if none). */
const char* nary_last_error(void);
void nary_string_free(char* s);
/* Dimension cap for generated and loaded objects; NARY_MAX_DIM overrides. */
int nary_max_dim(void);

/* Algebras. Indices are 1-based. */
nary_status nary_algebra_parse(const char* text, nary_algebra** out);
nary_status nary_algebra_load(const char* path, nary_algebra** out);
nary_status nary_algebra_emit(const nary_algebra* a, char** out);
void nary_algebra_free(nary_algebra* a);
const char* nary_algebra_kind(const nary_algebra* a);
int nary_algebra_arity(const nary_algebra* a);
int nary_algebra_dim(const nary_algebra* a);
/* Structure constant c_{idx[0..arity-1]}^k as a rational literal. */
nary_status nary_algebra_get(const nary_algebra* a, const int* idx, int k, char** value);
/* Sets c_{idx}^k; antisymmetric kinds fill the permuted slots. */
nary_status nary_algebra_set(nary_algebra* a, const int* idx, int k, const char* value);

/* Generators. signs is a string of '+'/'-' of length n+1. */
nary_status nary_generate_simple_fa(int n, const char* signs, nary_algebra** out);
nary_status nary_generate_su(int n, nary_algebra** out);
/* Order 2m-2 bracket from the (2m-1)-cocycle of su(n). */
nary_status nary_generate_gla_from_su(int n, int m, nary_algebra** out);
nary_status nary_generate_heisenberg(int N, nary_algebra** out);
nary_status nary_generate_nhw(int N, nary_algebra** out);
nary_status nary_generate_clifford(int n, nary_algebra** out);
nary_status nary_generate_abelian(const char* kind, int arity, int dim, nary_algebra** out);

/* Runs a suite ("identity", "metric", "cohomology", "all"). The report is
 * JSON lines; *passed is 1 when every check passed. */
nary_status nary_check(const nary_algebra* a, const char* suite, char** report, int* passed);
/* complex: NULL, "trivial", "module", "deformation"; rep: NULL, "ad", "trivial". */
nary_status nary_cohomology(const nary_algebra* a, const char* complex, const char* rep, int pmax, char** report);

/* Polynomial multivector fields. */
nary_status nary_tensor_parse(const char* text, nary_tensor** out);
nary_status nary_tensor_load(const char* path, nary_tensor** out);
nary_status nary_tensor_emit(const nary_tensor* t, char** out);
void nary_tensor_free(nary_tensor* t);
int nary_tensor_order(const nary_tensor* t);
int nary_tensor_dim(const nary_tensor* t);
/* omega^I = c_I^s x_s from an antisymmetric algebra. */
nary_status nary_tensor_linear(const nary_algebra* a, nary_tensor** out);
/* d_1 ^ ... ^ d_n on R^dim */
nary_status nary_tensor_nambu(int n, int dim, nary_tensor** out);
/* check: "gps", "np", "snb-self". */
nary_status nary_poisson(const nary_tensor* t, const char* check, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif
