/* Copyright 2026 The Multitangent Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the multitangent library: common supporting hyperplanes
 * of n closed connected sets in real projective n-space.
 *
 * Scenes and results are opaque handles owned by the caller and released
 * with the matching *_free function. Every entry point returns an
 * mt_status; on failure mt_last_error() describes the problem for the
 * calling thread. Results carry a JSON report (mt_result_json) that stays
 * valid until the result is freed.
 */

#ifndef MULTITANGENT_MULTITANGENT_H
#define MULTITANGENT_MULTITANGENT_H

#include <stddef.h>

#ifndef MT_API
#if defined(_WIN32)
#define MT_API __declspec(dllexport)
#else
#define MT_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mt_scene mt_scene;
typedef struct mt_result mt_result;

typedef enum mt_status {
  MT_OK = 0,
  MT_ERR_INVALID_ARGUMENT = 1,
  /* Scene or curve file missing, malformed or violating an invariant. */
  MT_ERR_SCENE = 2,
  /* No condition point; the result still carries the rejection report. */
  MT_ERR_CONDITION_NOT_ESTABLISHED = 3,
  MT_ERR_UNSUPPORTED = 4,
  MT_ERR_IO = 5,
  /* Refinement or another numerical step failed. */
  MT_ERR_NUMERIC = 6,
  MT_ERR_INTERNAL = 7
} mt_status;

typedef enum mt_backend {
  MT_BACKEND_AUTO = 0,
  MT_BACKEND_DUAL = 1,
  MT_BACKEND_CALIPERS = 2,
  MT_BACKEND_ORACLE = 3
} mt_backend;

/* Zero fields select the library defaults. */
typedef struct mt_options {
  mt_backend backend;
  int directions;          /* condition samples through p */
  int search_grid;         /* condition point search grid */
  int dual_resolution;     /* H* raster cells per axis */
  int oracle_grid;         /* oracle angular grid */
  int circle_samples;      /* polygon size for analytic hulls */
  int max_iter;            /* refinement iteration cap */
  int conjecture_samples;  /* probe points per shape */
  double clearance_floor;
  double dedup_angle;
  double family_angle;
  double contact_tolerance;
  int include_timings;     /* nonzero: add wall-clock timings to reports */
} mt_options;

MT_API void mt_options_default(mt_options* options);

MT_API const char* mt_version(void);
MT_API const char* mt_status_name(mt_status status);
/* Message of the last failure on this thread; empty after success. */
MT_API const char* mt_last_error(void);

MT_API mt_status mt_scene_load_file(const char* path, mt_scene** out);
MT_API mt_status mt_scene_load_json(const char* text, mt_scene** out);
MT_API void mt_scene_free(mt_scene* scene);
MT_API int mt_scene_dimension(const mt_scene* scene);
MT_API size_t mt_scene_shape_count(const mt_scene* scene);
/* Serialized scene (implicit curves written as their loops). */
MT_API mt_status mt_scene_to_json(const mt_scene* scene, mt_result** out);

/* p holds n affine or n+1 homogeneous coordinates; pass NULL to search for
 * a condition point. MT_ERR_CONDITION_NOT_ESTABLISHED leaves the rejection
 * report in *out. */
MT_API mt_status mt_check_condition(const mt_scene* scene, const double* p, size_t p_len,
                                    const mt_options* options, mt_result** out);

MT_API mt_status mt_find_supports(const mt_scene* scene, const mt_options* options,
                                  mt_result** out);
MT_API mt_status mt_count_supports(const mt_scene* scene, const mt_options* options,
                                   mt_result** out);
MT_API mt_status mt_oracle_supports(const mt_scene* scene, const mt_options* options,
                                    mt_result** out);
MT_API mt_status mt_conjecture_check(const mt_scene* scene, const mt_options* options,
                                     mt_result** out);

/* Rasterizes H* around p (NULL: search) and writes the members as CSV
 * when csv_path is not NULL. */
MT_API mt_status mt_dual_dump(const mt_scene* scene, const double* p, size_t p_len,
                              const mt_options* options, const char* csv_path,
                              mt_result** out);

/* Bitangents of the ovals of an implicit plane curve file. pairs is NULL
 * or "all" for every oval pair, else "i,j" (0-based); resolution 0 keeps
 * the file's value. */
MT_API mt_status mt_curve_bitangents(const char* curve_path, const char* pairs,
                                     int resolution, const mt_options* options,
                                     mt_result** out);

/* Writes an SVG of a planar scene with the certificates of `supports`
 * (a result of mt_find_supports or mt_oracle_supports, or NULL). */
MT_API mt_status mt_render_svg(const mt_scene* scene, const mt_result* supports,
                               const char* path);

MT_API const char* mt_result_json(const mt_result* result);
/* Certificates held by the result (0 for reports without any). */
MT_API size_t mt_result_certificate_count(const mt_result* result);
/* Writes the n+1 covector entries of certificate i into covector. */
MT_API mt_status mt_result_certificate(const mt_result* result, size_t i, double* covector,
                                       size_t len);
MT_API mt_status mt_result_write(const mt_result* result, const char* path);
MT_API void mt_result_free(mt_result* result);

#ifdef __cplusplus
}
#endif

#endif /* MULTITANGENT_MULTITANGENT_H */
