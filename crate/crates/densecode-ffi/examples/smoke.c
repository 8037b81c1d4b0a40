/* Minimal C consumer. Build from the workspace root with:
 *   cargo build -p densecode-ffi
 *   cc -I crates/densecode-ffi/include crates/densecode-ffi/examples/smoke.c \
 *      target/debug/libdensecode_ffi.a -lpthread -ldl -lm -o smoke && ./smoke
 */
#include <assert.h>
#include <stdint.h>
#include <stdio.h>
#include <string.h>
#include "densecode.h"

int main(void) {
    printf("densecode %s\n", dc_version());

    DcState *state = NULL;
    assert(dc_state_builtin("ghz3", &state) == DC_STATUS_OK);

    char *text = NULL;
    assert(dc_state_format(state, &text) == DC_STATUS_OK);
    assert(strcmp(text, "+000\n+111") == 0);
    dc_string_free(text);

    DcCodebook *cb = NULL;
    uint32_t positions[] = {1, 2};
    assert(dc_codebook_build(state, "G2^12", positions, 2, &cb) == DC_STATUS_OK);
    assert(dc_codebook_len(cb) == 8);

    char *codeword = NULL;
    assert(dc_encode(cb, 4, &codeword) == DC_STATUS_OK);
    assert(strcmp(codeword, "-110\n+001") == 0);

    size_t index = 99;
    assert(dc_decode(cb, codeword, &index) == DC_STATUS_OK);
    assert(index == 4);
    dc_string_free(codeword);

    char *transcript = NULL;
    assert(dc_simulate_json(cb, "101110", &transcript) == DC_STATUS_OK);
    assert(strstr(transcript, "\"delivered\": \"101110\"") != NULL);
    dc_string_free(transcript);

    /* failure path: non-verifying subgroup reports a constraint error */
    DcCodebook *bad = NULL;
    assert(dc_codebook_build(state, "G2^3", positions, 2, &bad) == DC_STATUS_CONSTRAINT_ERROR);
    printf("expected failure message: %s\n", dc_last_error());

    dc_codebook_free(cb);
    dc_state_free(state);
    printf("C smoke test passed\n");
    return 0;
}
