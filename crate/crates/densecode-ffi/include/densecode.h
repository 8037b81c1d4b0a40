/* C interface to the densecode library. */

#ifndef DENSECODE_H
#define DENSECODE_H

/* Generated by cbindgen from densecode-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared with the C side.
 */
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  /**
   * A text input failed to parse.
   */
  DC_STATUS_PARSE_ERROR = 1,
  /**
   * Operator length and operated-qubit count disagree.
   */
  DC_STATUS_ARITY_ERROR = 2,
  /**
   * The state violates an evenness/orthogonality constraint, or the
   * triple fails verification.
   */
  DC_STATUS_CONSTRAINT_ERROR = 3,
  /**
   * Index out of range or no matching codeword.
   */
  DC_STATUS_LOOKUP_ERROR = 4,
  /**
   * Null pointer or invalid UTF-8 argument.
   */
  DC_STATUS_BAD_ARGUMENT = 5,
  /**
   * Internal invariant violation.
   */
  DC_STATUS_INTERNAL_ERROR = 6,
} DcStatus;

/**
 * Opaque codebook handle.
 */
typedef struct DcCodebook DcCodebook;

/**
 * Opaque symmetric-state handle.
 */
typedef struct DcState DcState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *dc_version(void);

/**
 * Message for the most recent failure on this thread; valid until the next
 * failing call. Do not free.
 */
const char *dc_last_error(void);

/**
 * Frees a string returned through a `char**` out-parameter.
 */
void dc_string_free(char *ptr);

/**
 * Creates a state from a builtin name (`ghz3`, `w1_4`, `cluster5`, …).
 */
enum DcStatus dc_state_builtin(const char *name, struct DcState **out);

/**
 * Parses a state from its text form (`+000`, `-111`, comma or newline
 * separated, `#` comments).
 */
enum DcStatus dc_state_parse(const char *text, struct DcState **out);

void dc_state_free(struct DcState *state);

/**
 * Writes the state's one-item-per-line text form.
 */
enum DcStatus dc_state_format(const struct DcState *state, char **out);

/**
 * JSON listing of the 2^t-order subgroup construction for t qubits.
 */
enum DcStatus dc_construct_json(uint32_t t, char **out);

/**
 * Selection report (JSON) for a state. `filter`: 0 none, 1 literal,
 * 2 semantic.
 */
enum DcStatus dc_select_json(const struct DcState *state, uint32_t filter, char **out);

/**
 * Builds a verified codebook from a subgroup display label and 1-based
 * operated-qubit indices.
 */
enum DcStatus dc_codebook_build(const struct DcState *state,
                                const char *subgroup_label,
                                const uint32_t *positions,
                                uintptr_t positions_len,
                                struct DcCodebook **out);

void dc_codebook_free(struct DcCodebook *cb);

/**
 * Number of codewords (2^t).
 */
uintptr_t dc_codebook_len(const struct DcCodebook *cb);

/**
 * Writes the text form of codeword `index`.
 */
enum DcStatus dc_encode(const struct DcCodebook *cb, uintptr_t index, char **out);

/**
 * Decodes a received state (text form) to its message index.
 */
enum DcStatus dc_decode(const struct DcCodebook *cb, const char *state_text, uintptr_t *out_index);

/**
 * Round-trips a classical bit message; writes the transcript JSON.
 */
enum DcStatus dc_simulate_json(const struct DcCodebook *cb, const char *bits, char **out);

/**
 * Emits the dense-coding table. `format`: 0 markdown, 1 csv, 2 json.
 */
enum DcStatus dc_table(const struct DcCodebook *cb, uint32_t format, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DENSECODE_H */
