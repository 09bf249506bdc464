/* cipow: graded Betti tables, Hilbert functions and fat-point invariants of
 * powers of complete intersections, behind a plain C interface.
 *
 * Conventions:
 *  - Every fallible call returns a cipow_status; CIPOW_OK is 0.
 *  - On failure, cipow_last_error() describes the violated condition
 *    (thread-local message, valid until the next failing call).
 *  - Arbitrary-precision results travel as decimal strings; exact rationals
 *    as "p/q".  Strings returned through char** out-parameters are owned by
 *    the caller and released with cipow_free_string().
 *  - Opaque handles are released with their matching *_free() function.
 */
#ifndef CIPOW_H
#define CIPOW_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32) || defined(__CYGWIN__)
#if defined(cipow_EXPORTS)
#define CIPOW_API __declspec(dllexport)
#else
#define CIPOW_API __declspec(dllimport)
#endif
#else
#define CIPOW_API __attribute__((visibility("default")))
#endif

typedef enum cipow_status {
  CIPOW_OK = 0,
  CIPOW_ERROR_INVALID_ARGUMENT = 1, /* malformed value or violated precondition */
  CIPOW_ERROR_PARSE = 2,            /* JSON / schema error */
  CIPOW_ERROR_INDEX = 3,            /* index out of range */
  CIPOW_ERROR_VERIFY = 4,           /* a verification property failed */
  CIPOW_ERROR_INTERNAL = 5
} cipow_status;

typedef struct cipow_citype cipow_citype;   /* degree tuple (d_1<=...<=d_r) */
typedef struct cipow_betti cipow_betti;     /* graded Betti table of I^s */
typedef struct cipow_hilbert cipow_hilbert; /* Hilbert values + numerator */
typedef struct cipow_points cipow_points;   /* rational fat-point config */

CIPOW_API const char* cipow_version(void);
CIPOW_API const char* cipow_last_error(void);
CIPOW_API void cipow_free_string(char* text);

/* ---- type ---------------------------------------------------------- */

CIPOW_API cipow_status cipow_citype_new(const int* degrees, int count,
                                        cipow_citype** out);
CIPOW_API void cipow_citype_free(cipow_citype* type);
CIPOW_API int cipow_citype_generators(const cipow_citype* type);
CIPOW_API int cipow_citype_degree(const cipow_citype* type, int index);

/* ---- combinatorics -------------------------------------------------- */

CIPOW_API cipow_status cipow_binomial(long n, long k, char** out);
/* Weakly increasing index chains of the given length ending exactly at
 * endpoint, entries in [length+1, limit]. */
CIPOW_API cipow_status cipow_chain_count(int length, int endpoint, int limit,
                                         char** out);

/* ---- resolutions ----------------------------------------------------- */

CIPOW_API cipow_status cipow_koszul_betti(const cipow_citype* type,
                                          cipow_betti** out);
CIPOW_API cipow_status cipow_power_betti(const cipow_citype* type, int power,
                                         cipow_betti** out);
CIPOW_API void cipow_betti_free(cipow_betti* table);
CIPOW_API int cipow_betti_columns(const cipow_betti* table);
CIPOW_API cipow_status cipow_betti_json(const cipow_betti* table, char** out);
CIPOW_API cipow_status cipow_betti_text(const cipow_betti* table, char** out);
/* min_shifts/max_shifts are caller arrays of length cipow_betti_columns(). */
CIPOW_API cipow_status cipow_betti_extremes(const cipow_betti* table,
                                            long* min_shifts, long* max_shifts);
CIPOW_API cipow_status cipow_rank_formula(int r, int power, int index, char** out);

/* ---- Hilbert functions ---------------------------------------------- */

CIPOW_API cipow_status cipow_hilbert_ci(const cipow_citype* type, int ambient,
                                        int max_degree, cipow_hilbert** out);
CIPOW_API cipow_status cipow_hilbert_power(const cipow_citype* type, int ambient,
                                           int power, int max_degree,
                                           cipow_hilbert** out);
CIPOW_API cipow_status cipow_hilbert_from_betti(const cipow_betti* table,
                                                int ambient, int max_degree,
                                                cipow_hilbert** out);
CIPOW_API void cipow_hilbert_free(cipow_hilbert* data);
CIPOW_API cipow_status cipow_hilbert_json(const cipow_hilbert* data, char** out);
CIPOW_API cipow_status cipow_hilbert_csv(const cipow_hilbert* data, char** out);
CIPOW_API cipow_status cipow_multiplicity(const cipow_citype* type, int power,
                                          char** out);
/* Default Hilbert window: power * (d_1 + ... + d_r) + 5. */
CIPOW_API cipow_status cipow_default_window(const cipow_citype* type, int power,
                                            int* out);

/* ---- multiplicity bound report --------------------------------------- */

CIPOW_API cipow_status cipow_hhs_json(const cipow_citype* type, int power,
                                      char** out);
/* One line: "lower <= e <= upper : HOLDS". */
CIPOW_API cipow_status cipow_hhs_summary(const cipow_citype* type, int power,
                                         char** out);

/* ---- fat points ------------------------------------------------------ */

CIPOW_API cipow_status cipow_fat_ci_json(const cipow_citype* type, int ambient,
                                         int mult, char** out);
CIPOW_API cipow_status cipow_fat_sandwich_json(const cipow_citype* type,
                                               int ambient, const int* mults,
                                               int count, char** out);
/* Hilbert values of a reduced complete intersection minus one point,
 * degrees 0..max_degree, as {"type":..., "values":[...]}. */
CIPOW_API cipow_status cipow_cb_minus_point_json(const cipow_citype* type,
                                                 int max_degree, char** out);
/* split_first_axis != 0 splits the smallest degree (ri bounds); otherwise
 * the largest degree is split (alpha bounds). */
CIPOW_API cipow_status cipow_split_json(const cipow_citype* type, int ambient,
                                        int mult, int split_first_axis,
                                        int removed_in_hyperplane, char** out);
CIPOW_API cipow_status cipow_p2_exact_ri(int d1, int d2, int mult, long* out);
CIPOW_API cipow_status cipow_b_value(int minus_point, int d1, int d2, int* out);
CIPOW_API cipow_status cipow_trung_valla_bound(long ri_support,
                                               const int* b_values, int count,
                                               long* out);

/* ---- oracles --------------------------------------------------------- */

CIPOW_API cipow_status cipow_monomial_hf(const cipow_citype* type, int ambient,
                                         int power, long degree, char** out);
/* Parses {"ambient":n, "points":[{"coords":["1","0","2/3"],"mult":3},...]}. */
CIPOW_API cipow_status cipow_points_parse(const char* json_text,
                                          cipow_points** out);
/* Grid spec: {"lists":[[...],...]} or {"sizes":[3,4]}, plus "mult" or "mults". */
CIPOW_API cipow_status cipow_points_grid(const char* json_text,
                                         cipow_points** out);
CIPOW_API void cipow_points_free(cipow_points* config);
CIPOW_API int cipow_points_count(const cipow_points* config);
CIPOW_API cipow_status cipow_points_json(const cipow_points* config, char** out);
CIPOW_API cipow_status cipow_points_remove(const cipow_points* config, int index,
                                           cipow_points** out);
CIPOW_API cipow_status cipow_points_hf(const cipow_points* config, long degree,
                                       long* out);
/* {"ambient":..., "count":..., "deg":..., "alpha":..., "ri":..., "hf":[...]}
 * with hf listed through max(ri, alpha)+1. */
CIPOW_API cipow_status cipow_points_report_json(const cipow_points* config,
                                                char** out);

/* ---- verification ----------------------------------------------------- */

/* suite: "ranks", "series", "oracle" or "all". The report (one line per
 * property plus a summary) is returned in all outcomes; the status is
 * CIPOW_ERROR_VERIFY when any property fails. */
CIPOW_API cipow_status cipow_verify(const char* suite, int max_r,
                                    int max_degree_value, int max_power,
                                    int max_window, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CIPOW_H */
