#include <cstdio>

#include "bolsuper/bolsuper.h"

int main(int argc, char** argv) {
    int code = 0;
    char* out = nullptr;
    char* err = nullptr;
    if (bs_run_command(argc - 1, argv + 1, &code, &out, &err) != BS_OK) {
        std::fprintf(stderr, "internal error: %s\n", bs_last_error());
        return 3;
    }
    std::fputs(out, stdout);
    std::fputs(err, stderr);
    bs_string_free(out);
    bs_string_free(err);
    return code;
}
