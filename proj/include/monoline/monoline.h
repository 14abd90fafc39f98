/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 Monoline Contributors
 *
 * C API of the monoline shared library: analytic-signal and monogenic-signal
 * analysis of 1D signals and 2D images with log-Gabor spherical quadrature
 * filter banks, plus phase-based feature measures and PNM/CSV I/O.
 *
 * Conventions:
 *   - All functions returning ml_status report ML_OK (0) on success. On
 *     failure the out-parameters are left untouched and a thread-local
 *     message is available via ml_last_error_message().
 *   - Out-parameters of handle type produce owned objects; release them with
 *     the matching *_destroy function. Destroy functions accept NULL.
 *   - Pointers returned by *_data accessors borrow from the handle and stay
 *     valid until the handle is destroyed. Rasters are row-major with the
 *     first index as the vertical (y) axis.
 *   - Images are processed on a [0, 1] intensity scale; the PGM reader
 *     divides by maxval on load.
 */

#ifndef MONOLINE_MONOLINE_H
#define MONOLINE_MONOLINE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ML_BUILD_SHARED)
#    define ML_API __declspec(dllexport)
#  else
#    define ML_API __declspec(dllimport)
#  endif
#else
#  define ML_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ml_status {
    ML_OK = 0,
    ML_ERR_NULL_ARGUMENT = 1,
    ML_ERR_INVALID_SIZE = 2,
    ML_ERR_INVALID_INPUT = 3,
    ML_ERR_SHAPE_MISMATCH = 4,
    ML_ERR_PARSE = 5,
    ML_ERR_IO = 6,
    ML_ERR_INTERNAL = 7
} ml_status;

/* Static name of a status code, e.g. "ML_ERR_PARSE". */
ML_API const char* ml_status_string(ml_status status);

/* Detail message of the last failure on this thread; empty string if none. */
ML_API const char* ml_last_error_message(void);

ML_API const char* ml_version(void);

/* ------------------------------------------------------------------ */
/* Handles                                                            */

typedef struct ml_signal ml_signal;            /* real 1D signal */
typedef struct ml_image ml_image;              /* real 2D raster */
typedef struct ml_filter_bank ml_filter_bank;  /* log-Gabor quadrature bank */
typedef struct ml_monogenic ml_monogenic;      /* per-scale monogenic parts */

/* ------------------------------------------------------------------ */
/* Signals                                                            */

ML_API ml_status ml_signal_create(const double* samples, size_t length, ml_signal** out);
ML_API ml_status ml_signal_read_csv(const char* path, ml_signal** out);
ML_API ml_status ml_signal_write_csv(const ml_signal* signal, const char* path);
ML_API size_t ml_signal_length(const ml_signal* signal);
ML_API const double* ml_signal_data(const ml_signal* signal);
ML_API void ml_signal_destroy(ml_signal* signal);

/* Real-output Hilbert transform (frequency multiplier -i*sgn(omega)). */
ML_API ml_status ml_hilbert_transform(const ml_signal* signal, ml_signal** out);

/* Analytic signal; real part equals the input, imaginary part is its
 * quadrature companion. */
ML_API ml_status ml_analytic_signal(const ml_signal* signal, ml_signal** out_real,
                                    ml_signal** out_imag);

/* Local amplitude (envelope) and local phase of the input after log-Gabor
 * bandpass filtering at the given centre wavelength (samples/cycle, > 2). */
ML_API ml_status ml_signal_local_phase_amplitude(const ml_signal* signal,
                                                 double center_wavelength, double sigma0,
                                                 ml_signal** out_amplitude,
                                                 ml_signal** out_phase);

/* Local phase per scale: row i of the result is the phase of the signal
 * filtered at wavelengths[i]. Result height = count, width = signal length. */
ML_API ml_status ml_signal_scaleogram(const ml_signal* signal, const double* wavelengths,
                                      size_t count, double sigma0, ml_image** out);

/* ------------------------------------------------------------------ */
/* Images                                                             */

/* samples may be NULL for a zero-filled image. */
ML_API ml_status ml_image_create(size_t height, size_t width, const double* samples,
                                 ml_image** out);
ML_API size_t ml_image_height(const ml_image* image);
ML_API size_t ml_image_width(const ml_image* image);
ML_API const double* ml_image_data(const ml_image* image);
ML_API void ml_image_destroy(ml_image* image);

/* Symmetric reflection to double height and width; cropping the top-left
 * block undoes it. */
ML_API ml_status ml_image_mirror_pad_double(const ml_image* image, ml_image** out);
ML_API ml_status ml_image_crop(const ml_image* image, size_t y0, size_t x0, size_t height,
                               size_t width, ml_image** out);

/* PGM P2/P5, maxval 255 or 65535; values normalized to [0, 1]. */
ML_API ml_status ml_image_read_pgm(const char* path, ml_image** out);

/* P5 output, maxval 255; [lo, hi] mapped linearly onto [0, 255]. */
ML_API ml_status ml_image_write_pgm(const ml_image* image, const char* path, double lo,
                                    double hi);

/* P6 output; hue encodes orientation (radians, full turn = full hue circle),
 * saturation encodes magnitude normalized by its maximum. */
ML_API ml_status ml_image_write_orientation_ppm(const ml_image* orientation,
                                                const ml_image* magnitude, const char* path);

/* ------------------------------------------------------------------ */
/* Filter banks                                                       */

/* One scale per wavelength (pixels/cycle, each > 2), shared sigma0 in (0,1).
 * Banks are cached per (height, width, scale list) and shared. */
ML_API ml_status ml_filter_bank_create(size_t height, size_t width, const double* wavelengths,
                                       size_t count, double sigma0, ml_filter_bank** out);
ML_API size_t ml_filter_bank_num_scales(const ml_filter_bank* bank);
ML_API void ml_filter_bank_destroy(ml_filter_bank* bank);

/* Frequency-domain rasters of one scale, FFT bin order (DC at index 0). */
ML_API ml_status ml_filter_bank_even(const ml_filter_bank* bank, size_t scale, ml_image** out);
ML_API ml_status ml_filter_bank_odd(const ml_filter_bank* bank, size_t scale,
                                    ml_image** out_real, ml_image** out_imag);

/* Image-domain impulse responses of one scale, FFT bin order (centre tap at
 * index 0); fftshift for display. The even response is real; the odd response
 * is complex with both parts returned. */
ML_API ml_status ml_filter_bank_even_impulse(const ml_filter_bank* bank, size_t scale,
                                             ml_image** out);
ML_API ml_status ml_filter_bank_odd_impulse(const ml_filter_bank* bank, size_t scale,
                                            ml_image** out_real, ml_image** out_imag);

/* ------------------------------------------------------------------ */
/* Monogenic signal                                                   */

/* Image dimensions must match the bank grid. */
ML_API ml_status ml_monogenic_compute(const ml_image* image, const ml_filter_bank* bank,
                                      ml_monogenic** out);
ML_API size_t ml_monogenic_num_scales(const ml_monogenic* m);
ML_API void ml_monogenic_destroy(ml_monogenic* m);

typedef enum ml_part {
    ML_PART_EVEN = 0,
    ML_PART_ODD1 = 1,
    ML_PART_ODD2 = 2
} ml_part;

ML_API ml_status ml_monogenic_part(const ml_monogenic* m, size_t scale, ml_part part,
                                   ml_image** out);
ML_API ml_status ml_monogenic_amplitude(const ml_monogenic* m, size_t scale, ml_image** out);
/* Local phase in [0, pi]. */
ML_API ml_status ml_monogenic_phase(const ml_monogenic* m, size_t scale, ml_image** out);
/* Local orientation in (-pi, pi], pointing uphill. */
ML_API ml_status ml_monogenic_orientation(const ml_monogenic* m, size_t scale, ml_image** out);
ML_API ml_status ml_monogenic_odd_magnitude(const ml_monogenic* m, size_t scale, ml_image** out);

/* Local cosine model patch amplitude*cos(x'.n(orientation) + phase) on an
 * odd-sized size x size window. */
ML_API ml_status ml_local_model_patch(double amplitude, double phase, double orientation,
                                      size_t size, ml_image** out);

/* ------------------------------------------------------------------ */
/* Feature measures                                                   */

/* S = max(0, |f_e| - f_o - T) / (A + epsilon), in [0, 1). */
ML_API ml_status ml_feature_symmetry(const ml_monogenic* m, size_t scale, double threshold,
                                     double epsilon, ml_image** out);
/* R = max(0, f_o - |f_e| - T) / (A + epsilon), in [0, 1). */
ML_API ml_status ml_feature_asymmetry(const ml_monogenic* m, size_t scale, double threshold,
                                      double epsilon, ml_image** out);
/* S * sgn(f_e), in (-1, 1). */
ML_API ml_status ml_feature_signed_symmetry(const ml_monogenic* m, size_t scale,
                                            double threshold, double epsilon, ml_image** out);
/* Complex measure R * f_oc/|f_oc| in polar form: out_magnitude holds R and
 * out_angle its argument (the local orientation where R > 0). */
ML_API ml_status ml_feature_oriented_asymmetry(const ml_monogenic* m, size_t scale,
                                               double threshold, double epsilon,
                                               ml_image** out_magnitude, ml_image** out_angle);

/* Sums over all scales of the per-scale terms. With normalize nonzero the
 * sums are divided by the number of scales. */
ML_API ml_status ml_feature_multiscale_symmetry(const ml_monogenic* m, double threshold,
                                                double epsilon, int normalize, ml_image** out);
ML_API ml_status ml_feature_multiscale_asymmetry(const ml_monogenic* m, double threshold,
                                                 double epsilon, int normalize, ml_image** out);
ML_API ml_status ml_feature_multiscale_signed_symmetry(const ml_monogenic* m, double threshold,
                                                       double epsilon, int normalize,
                                                       ml_image** out);
ML_API ml_status ml_feature_multiscale_oriented_asymmetry(const ml_monogenic* m,
                                                          double threshold, double epsilon,
                                                          int normalize,
                                                          ml_image** out_magnitude,
                                                          ml_image** out_angle);

#ifdef __cplusplus
}
#endif

#endif /* MONOLINE_MONOLINE_H */
