#ifndef INFHOPF_H
#define INFHOPF_H

/* Generated by cbindgen from the infhopf-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Antipode algorithm selector.
typedef enum IhAntipodeMethod {
  IH_ANTIPODE_RECURSIVE = 0,
  IH_ANTIPODE_LEFT_CUT = 1,
} IhAntipodeMethod;

// Dual-basis algorithm selector.
typedef enum IhDualMethod {
  IH_DUAL_MOBIUS = 0,
  IH_DUAL_GRAM = 1,
} IhDualMethod;

// Pairing algorithm selector.
typedef enum IhPairMethod {
  IH_PAIR_BIJECTION = 0,
  IH_PAIR_RECURSIVE = 1,
  IH_PAIR_TAMARI = 2,
} IhPairMethod;

// Status code returned by every API function.
typedef enum IhStatus {
  // Success; out pointers are valid.
  IH_STATUS_OK = 0,
  // A required pointer argument was NULL.
  IH_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  IH_STATUS_UTF8 = 2,
  // Parsing or a domain-side precondition failed; see
  // `ih_last_error_message`.
  IH_STATUS_ERROR = 3,
  // An internal panic was caught; see `ih_last_error_message`.
  IH_STATUS_PANIC = 4,
} IhStatus;

// Opaque element of the algebra (a rational linear combination of
// forests).
typedef struct IhElement IhElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses an element from its text form (e.g. `"2*[[]] - 1/3*[] []"`).
//
// # Safety
// `text` must point to a NUL-terminated string and `out` to writable
// storage for one pointer.
enum IhStatus ih_element_parse(const char *text, struct IhElement **out);

// Renders an element in the canonical text form.
//
// # Safety
// `element` must be a live handle and `out` writable storage for one
// pointer.
enum IhStatus ih_element_to_string(const struct IhElement *element, char **out);

// Sum of two elements.
//
// # Safety
// `left` and `right` must be live handles and `out` writable storage for
// one pointer.
enum IhStatus ih_element_add(const struct IhElement *left,
                             const struct IhElement *right,
                             struct IhElement **out);

// Product (concatenation, extended bilinearly) of two elements.
//
// # Safety
// `left` and `right` must be live handles and `out` writable storage for
// one pointer.
enum IhStatus ih_element_product(const struct IhElement *left,
                                 const struct IhElement *right,
                                 struct IhElement **out);

// Coproduct of an element, rendered as a sum of `F (x) G` terms.
//
// # Safety
// `element` must be a live handle and `out` writable storage for one
// pointer.
enum IhStatus ih_coproduct_string(const struct IhElement *element, char **out);

// Antipode of an element by the selected algorithm.
//
// # Safety
// `element` must be a live handle and `out` writable storage for one
// pointer.
enum IhStatus ih_antipode(const struct IhElement *element,
                          enum IhAntipodeMethod method,
                          struct IhElement **out);

// Pairing of two forests (in bracket notation) by the selected algorithm;
// the exact rational value is returned as text.
//
// # Safety
// `left` and `right` must point to NUL-terminated strings and `out` to
// writable storage for one pointer.
enum IhStatus ih_pair(const char *left, const char *right, enum IhPairMethod method, char **out);

// Dual-basis element `f_F` for the forest `F`, by Möbius inversion or by
// Gram-matrix inversion.
//
// # Safety
// `forest` must point to a NUL-terminated string and `out` to writable
// storage for one pointer.
enum IhStatus ih_dual_basis(const char *forest, enum IhDualMethod method, struct IhElement **out);

// Gram matrix of the pairing at one weight, as CSV with forest labels.
//
// # Safety
// `out` must point to writable storage for one pointer.
enum IhStatus ih_gram_csv(size_t weight, char **out);

// Möbius matrix of the full forest poset at one weight, as CSV.
//
// # Safety
// `out` must point to writable storage for one pointer.
enum IhStatus ih_mobius_csv(size_t weight, char **out);

// Hasse diagram of the full forest poset at one weight, as DOT text.
//
// # Safety
// `out` must point to writable storage for one pointer.
enum IhStatus ih_hasse_dot(size_t weight, char **out);

// Releases an element handle. NULL is accepted and ignored.
//
// # Safety
// `element` must be NULL or a live handle produced by this library; the
// handle is dead afterwards.
void ih_element_free(struct IhElement *element);

// Releases a string produced by this library. NULL is accepted and
// ignored.
//
// # Safety
// `text` must be NULL or a string produced by this library; the pointer is
// dead afterwards.
void ih_string_free(char *text);

// Message for the most recent failure on this thread, or NULL if the last
// call succeeded. Release with [`ih_string_free`].
//
// # Safety
// Callable at any time; the returned string is a fresh allocation.
char *ih_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* INFHOPF_H */
