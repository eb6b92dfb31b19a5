#ifndef GRIDSHELL_H
#define GRIDSHELL_H

/*
 * C interface to the gridshell library. A session holds loaded grid
 * diagrams, string-keyed options and the report of the last run. All
 * functions are synchronous; a session must not be shared between threads
 * without external locking. Strings returned by gs_report/gs_last_error
 * stay valid until the next call on the same session or gs_session_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INPUT = 1,     /* bad file, bad option value, parse failure */
  GS_ERR_CAP = 2,       /* a configured resource cap was exceeded */
  GS_ERR_INVARIANT = 3, /* a verified invariant failed */
  GS_ERR_INTERNAL = 4   /* a bug; should not happen */
} gs_status;

typedef struct gs_session gs_session;

gs_session* gs_session_new(void);
void gs_session_free(gs_session* s);

/* Loads a grid diagram from a file or from text. Grids accumulate; the
 * verify command consumes all of them, other commands the first. */
gs_status gs_add_grid_file(gs_session* s, const char* path);
gs_status gs_add_grid_text(gs_session* s, const char* name, const char* text);
void gs_clear_grids(gs_session* s);

/* Options (all values passed as strings):
 *   flavor        tilde | minus
 *   sector        integer Alexander sector filter
 *   floor         integer Maslov floor (required for minus)
 *   line-pos      half-integer position of the reference line
 *   interval-cap  max interval length swept by `shelling`
 *   gap-cap       max Maslov gap swept by `flowcat`
 *   budget        chain enumeration budget
 *   format        text | json
 *   facets        0 | 1, include certificates and facet lists
 *   threads       worker threads
 */
gs_status gs_set_option(gs_session* s, const char* key, const char* value);

/* Runs one of: homology, shelling, flowcat, verify. */
gs_status gs_run(gs_session* s, const char* command);

const char* gs_report(const gs_session* s);
const char* gs_last_error(const gs_session* s);

/* Library version as a string, e.g. "1.0.0". */
const char* gs_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GRIDSHELL_H */
