#ifndef CYCLIC_MVIF_H
#define CYCLIC_MVIF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CmvifOp {
  CMVIF_OP_ADD = 0,
  CMVIF_OP_SUB = 1,
  CMVIF_OP_MUL = 2,
  CMVIF_OP_DIV = 3,
} CmvifOp;

typedef enum CmvifPipeline {
  CMVIF_PIPELINE_ONE_STEP = 0,
  CMVIF_PIPELINE_GELP = 1,
} CmvifPipeline;

typedef enum CmvifStatus {
  CMVIF_STATUS_OK = 0,
  CMVIF_STATUS_NULL_POINTER = 1,
  CMVIF_STATUS_INVALID_ARGUMENT = 2,
  CMVIF_STATUS_BUFFER_TOO_SMALL = 3,
  CMVIF_STATUS_DECODE_FAILURE = 4,
  CMVIF_STATUS_MISSING_ARTIFACT = 5,
  CMVIF_STATUS_IO = 6,
  CMVIF_STATUS_INTERNAL = 7,
  CMVIF_STATUS_PANIC = 8,
} CmvifStatus;

typedef struct CmvifCode CmvifCode;

typedef struct CmvifDecoder CmvifDecoder;

typedef struct CmvifField CmvifField;

typedef struct CmvifCodeInfo {
  uint32_t n;
  uint32_t k;
  uint32_t q;
  uint32_t t;
  uint32_t field_order;
  size_t base_len;
} CmvifCodeInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread, or `""`.
 * Valid until the next call into this library from the same thread.
 */
const char *cmvif_last_error(void);

/**
 * Static name of a status code.
 */
const char *cmvif_status_name(enum CmvifStatus status);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cmvif_string_free(char *s);

/**
 * `GF(p^e)` with the modulus given as a radix-`p` code, e.g. `0x25` for
 * `x^5 + x^2 + 1` over GF(2).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CmvifStatus cmvif_field_new(uint32_t p, uint32_t e, uint64_t modulus, struct CmvifField **out);

/**
 * # Safety
 * `field` must be null or a handle from this library not yet freed.
 */
void cmvif_field_free(struct CmvifField *field);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t cmvif_field_order(const struct CmvifField *field);

/**
 * `α^k` for any integer `k`.
 *
 * # Safety
 * `field` must be a live handle; `out` valid for writes.
 */
enum CmvifStatus cmvif_field_alpha_pow(const struct CmvifField *field, int64_t k, uint32_t *out);

/**
 * Logarithm to base `α` of a nonzero element.
 *
 * # Safety
 * `field` must be a live handle; `out` valid for writes.
 */
enum CmvifStatus cmvif_field_log(const struct CmvifField *field, uint32_t a, uint32_t *out);

/**
 * `a op b`. Division by zero reports `CMVIF_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `field` must be a live handle; `out` valid for writes.
 */
enum CmvifStatus cmvif_field_apply(const struct CmvifField *field,
                                   enum CmvifOp op,
                                   uint32_t a,
                                   uint32_t b,
                                   uint32_t *out);

/**
 * Built-in code by name: `qr31`, `rs15`, `golay23`, `hamming7`, `bch15`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` valid for writes.
 */
enum CmvifStatus cmvif_code_from_preset(const char *name, struct CmvifCode **out);

/**
 * Code from the text of a `.spec` file.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` valid for writes.
 */
enum CmvifStatus cmvif_code_from_spec(const char *text, struct CmvifCode **out);

/**
 * Length-`n` code over `GF(q)` inside `GF(p^e)` with base set
 * `base_set[0..base_len]`, correcting `t` errors.
 *
 * # Safety
 * `base_set` must point to `base_len` values; `out` valid for writes.
 */
enum CmvifStatus cmvif_code_new(uint32_t p,
                                uint32_t e,
                                uint64_t modulus,
                                uint32_t n,
                                uint32_t q,
                                const uint32_t *base_set,
                                size_t base_len,
                                uint32_t t,
                                struct CmvifCode **out);

/**
 * # Safety
 * `code` must be null or a handle from this library not yet freed.
 */
void cmvif_code_free(struct CmvifCode *code);

/**
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum CmvifStatus cmvif_code_info(const struct CmvifCode *code, struct CmvifCodeInfo *out);

/**
 * Non-systematic encoding `m(x) g(x)`: `message` has `k` symbols of
 * `GF(q)`, `codeword` room for `codeword_cap >= n`.
 *
 * # Safety
 * Pointers must cover the stated lengths.
 */
enum CmvifStatus cmvif_code_encode(const struct CmvifCode *code,
                                   const uint32_t *message,
                                   size_t message_len,
                                   uint32_t *codeword,
                                   size_t codeword_cap);

/**
 * Writes 1 to `out` when `word` is a codeword, else 0.
 *
 * # Safety
 * `word` must point to `len` values; `out` valid for writes.
 */
enum CmvifStatus cmvif_code_is_codeword(const struct CmvifCode *code,
                                        const uint32_t *word_ptr,
                                        size_t len,
                                        int32_t *out);

/**
 * Decoder for `code` running `pipeline`. With a non-null `cache_dir`
 * artifacts are loaded from, or built into, that directory; with null they
 * are built in memory.
 *
 * # Safety
 * `code` must be a live handle, `cache_dir` null or NUL-terminated, `out`
 * valid for writes. The decoder keeps its own copy of the code.
 */
enum CmvifStatus cmvif_decoder_new(const struct CmvifCode *code,
                                   enum CmvifPipeline pipeline,
                                   const char *cache_dir,
                                   struct CmvifDecoder **out);

/**
 * # Safety
 * `decoder` must be null or a handle from this library not yet freed.
 */
void cmvif_decoder_free(struct CmvifDecoder *decoder);

/**
 * Decodes `received[0..len]` (`len == n`). On `CMVIF_STATUS_OK` the
 * corrected word is in `codeword[0..n]` and the number of corrected symbols
 * in `weight`. On `CMVIF_STATUS_DECODE_FAILURE` neither output is touched.
 *
 * # Safety
 * `received` must hold `len` values, `codeword` room for `codeword_cap`;
 * `weight` may be null.
 */
enum CmvifStatus cmvif_decoder_decode(const struct CmvifDecoder *decoder,
                                      const uint32_t *received,
                                      size_t len,
                                      uint32_t *codeword,
                                      size_t codeword_cap,
                                      uint32_t *weight);

/**
 * Full decoding report as `key = value` lines, the same text the CLI prints
 * with `--format kv`. Returned for failures too; free with
 * [`cmvif_string_free`].
 *
 * # Safety
 * `received` must hold `len` values; `out` valid for writes.
 */
enum CmvifStatus cmvif_decoder_report(const struct CmvifDecoder *decoder,
                                      const uint32_t *received,
                                      size_t len,
                                      bool with_trace,
                                      char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_MVIF_H */
