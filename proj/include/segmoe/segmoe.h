/* Copyright 2026 The segmoe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SEGMOE_SEGMOE_H_
#define SEGMOE_SEGMOE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEGMOE_API __declspec(dllexport)
#else
#define SEGMOE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum segmoe_status {
  SEGMOE_OK = 0,
  SEGMOE_ERR_INVALID_ARGUMENT = 1,
  SEGMOE_ERR_SHAPE = 2,
  SEGMOE_ERR_IO = 3,
  SEGMOE_ERR_FORMAT = 4,
  SEGMOE_ERR_STATE = 5,
  SEGMOE_ERR_NUMERIC = 6,
  SEGMOE_ERR_CONFIG = 7,
  SEGMOE_ERR_INTERNAL = 99
} segmoe_status;

typedef enum segmoe_stage {
  SEGMOE_STAGE_GEN_DATA = 0,
  SEGMOE_STAGE_TRAIN = 1,
  SEGMOE_STAGE_ATTACK = 2,
  SEGMOE_STAGE_UNIVERSAL = 3,
  SEGMOE_STAGE_TRANSFER = 4,
  SEGMOE_STAGE_REPORT = 5
} segmoe_stage;

typedef enum segmoe_split {
  SEGMOE_SPLIT_TRAIN = 0,
  SEGMOE_SPLIT_VAL = 1,
  SEGMOE_SPLIT_TEST = 2
} segmoe_split;

typedef enum segmoe_attack_family {
  SEGMOE_ATTACK_FGSM = 0,
  SEGMOE_ATTACK_BIM = 1,
  SEGMOE_ATTACK_PGD = 2
} segmoe_attack_family;

typedef struct segmoe_experiment segmoe_experiment;
typedef struct segmoe_dataset segmoe_dataset;
typedef struct segmoe_model segmoe_model;
typedef struct segmoe_noise segmoe_noise;

typedef struct segmoe_stage_options {
  const char* model;  /* NULL: whole roster */
  int has_epsilon;    /* nonzero: use epsilon below */
  double epsilon;
  int sweep;          /* attack stage: FGSM over the epsilon grid */
} segmoe_stage_options;

typedef struct segmoe_attack_options {
  segmoe_attack_family family;
  double epsilon;
  double step;        /* BIM step size or Adam learning rate */
  uint32_t iterations;
  uint64_t seed;
} segmoe_attack_options;

typedef void (*segmoe_log_fn)(const char* message, void* user);

/* Message of the last failed call on this thread ("" if none). */
SEGMOE_API const char* segmoe_last_error(void);
SEGMOE_API const char* segmoe_status_string(segmoe_status status);
SEGMOE_API const char* segmoe_version(void);

/* Experiments. Log messages of running stages go to `fn` (may be NULL). */
SEGMOE_API segmoe_status segmoe_experiment_open(const char* config_path,
                                                segmoe_experiment** out);
SEGMOE_API segmoe_status segmoe_experiment_open_json(const char* config_json,
                                                     segmoe_experiment** out);
SEGMOE_API void segmoe_experiment_free(segmoe_experiment* exp);
SEGMOE_API segmoe_status segmoe_experiment_set_seed(segmoe_experiment* exp, uint64_t seed);
SEGMOE_API segmoe_status segmoe_experiment_set_out_dir(segmoe_experiment* exp,
                                                       const char* out_dir);
SEGMOE_API segmoe_status segmoe_experiment_set_logger(segmoe_experiment* exp, segmoe_log_fn fn,
                                                      void* user);
/* Copies the NUL-terminated hex config hash into buf (17 bytes suffice). */
SEGMOE_API segmoe_status segmoe_experiment_config_hash(const segmoe_experiment* exp, char* buf,
                                                       size_t size);
/* Copies the output directory path (NUL-terminated) into buf. */
SEGMOE_API segmoe_status segmoe_experiment_out_dir(const segmoe_experiment* exp, char* buf,
                                                   size_t size);
SEGMOE_API segmoe_status segmoe_experiment_run(segmoe_experiment* exp, segmoe_stage stage,
                                               const segmoe_stage_options* options);
SEGMOE_API segmoe_status segmoe_stage_parse(const char* name, segmoe_stage* out);

/* Datasets. */
SEGMOE_API segmoe_status segmoe_dataset_generate(const char* scene_json, segmoe_dataset** out);
SEGMOE_API segmoe_status segmoe_dataset_load(const char* dir, segmoe_dataset** out);
SEGMOE_API segmoe_status segmoe_dataset_save(const segmoe_dataset* ds, const char* dir);
SEGMOE_API void segmoe_dataset_free(segmoe_dataset* ds);
SEGMOE_API segmoe_status segmoe_dataset_size(const segmoe_dataset* ds, size_t* out);
SEGMOE_API segmoe_status segmoe_dataset_shape(const segmoe_dataset* ds, size_t* channels,
                                              size_t* height, size_t* width,
                                              size_t* num_classes);
/* Copies sample `index` (storage order): image [C,H,W] and mask [H,W]. */
SEGMOE_API segmoe_status segmoe_dataset_sample(const segmoe_dataset* ds, size_t index,
                                               double* image, size_t image_len, uint16_t* mask,
                                               size_t mask_len);

/* Models: SEGCKPT1 / MOECKPT1 checkpoints or ensemble descriptors. */
SEGMOE_API segmoe_status segmoe_model_load(const char* path, segmoe_model** out);
SEGMOE_API void segmoe_model_free(segmoe_model* model);
SEGMOE_API segmoe_status segmoe_model_kind(const segmoe_model* model, char* buf, size_t size);
SEGMOE_API segmoe_status segmoe_model_num_classes(const segmoe_model* model, size_t* out);
/* images: n x [C,H,W] doubles; labels: n x [H,W]. */
SEGMOE_API segmoe_status segmoe_model_predict(const segmoe_model* model, const double* images,
                                              size_t n, uint16_t* labels, size_t labels_len);
SEGMOE_API segmoe_status segmoe_model_evaluate(const segmoe_model* model,
                                               const segmoe_dataset* ds, segmoe_split split,
                                               double* miou);
/* Per-instance attack on one image [C,H,W] with mask [H,W]; writes x_adv. */
SEGMOE_API segmoe_status segmoe_model_attack(const segmoe_model* model,
                                             const segmoe_attack_options* options,
                                             const double* image, const uint16_t* mask,
                                             double* x_adv, size_t len);

/* Universal perturbations (UNIVNZ01). */
SEGMOE_API segmoe_status segmoe_noise_load(const char* path, segmoe_noise** out);
SEGMOE_API void segmoe_noise_free(segmoe_noise* noise);
SEGMOE_API segmoe_status segmoe_noise_info(const segmoe_noise* noise, double* epsilon,
                                           double* linf, size_t* numel);
SEGMOE_API segmoe_status segmoe_noise_evaluate(const segmoe_noise* noise,
                                               const segmoe_model* model,
                                               const segmoe_dataset* ds, segmoe_split split,
                                               double* miou);

/* 100 * (attacked - clean) / clean. */
SEGMOE_API segmoe_status segmoe_drop_pct(double clean, double attacked, double* out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  /* SEGMOE_SEGMOE_H_ */
