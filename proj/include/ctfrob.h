#ifndef CTFROB_H
#define CTFROB_H

/* C interface to the cluster-tilted Frobenius dimension library.
 *
 * All functions return CTF_OK on success; on failure ctf_last_error() holds
 * a one-line diagnostic for the calling thread. Strings returned through
 * char** out parameters are heap-allocated and must be released with
 * ctf_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctf_status {
    CTF_OK = 0,
    CTF_ERR_PARSE = 1,        /* bad input text or invalid quiver/relations */
    CTF_ERR_PRECONDITION = 2, /* operation not applicable to this input */
    CTF_ERR_UNCLASSIFIED = 3, /* a formula was required but the quiver is unclassifiable */
    CTF_ERR_VERIFY_FAIL = 4   /* verification ran and reported FAIL */
} ctf_status;

/* Opaque handle: a quiver plus any relations given explicitly with it. */
typedef struct ctf_quiver ctf_quiver;

const char* ctf_last_error(void);
void ctf_string_free(char* s);

/* Quiver file format: 'vertices N', 'arrow NAME S T', 'zero V1 ... Vk',
 * 'comm V1 ... = W1 ...' lines; '#' starts a comment. */
ctf_status ctf_quiver_parse(const char* text, ctf_quiver** out);
/* family: "A" (linear orientation), "D" (fork), "E6" (Dynkin tree). rank is
 * the number of vertices; E6 requires rank 6. */
ctf_status ctf_quiver_seed(const char* family, int rank, ctf_quiver** out);
void ctf_quiver_free(ctf_quiver* q);

ctf_status ctf_quiver_print(const ctf_quiver* q, char** out);
ctf_status ctf_mutate(const ctf_quiver* q, int vertex, ctf_quiver** out);

/* Reports are newline-separated 'key: value' lines. */
ctf_status ctf_classify_report(const ctf_quiver* q, char** out);
ctf_status ctf_relations_report(const ctf_quiver* q, char** out);
ctf_status ctf_basis_report(const ctf_quiver* q, char** out);
/* method: "formula", "oracle" or "both"; pass NULL for the default (both
 * when the quiver classifies, oracle otherwise). */
ctf_status ctf_frobdim_report(const ctf_quiver* q, const char* method, int show_basis,
                              int show_coproducts, char** out);
/* One canonical representative per line; fails once the class exceeds limit. */
ctf_status ctf_enumerate_report(const ctf_quiver* seed, int limit, char** out);
/* Formula-versus-oracle check. With over_class nonzero the whole mutation
 * class of the seed is checked. Returns CTF_ERR_VERIFY_FAIL on any FAIL;
 * the report is still written. */
ctf_status ctf_verify_report(const ctf_quiver* seed, int over_class, int limit, char** out);

#ifdef __cplusplus
}
#endif

#endif
