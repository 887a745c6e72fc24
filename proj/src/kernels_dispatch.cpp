#include "qnet/kernels.hpp"

#include <cstdlib>
#include <string>

namespace qnet::kernels {

const Ops* avx2_ops_or_null();  // defined in kernels_avx2.cpp

namespace {

const Ops* g_active = nullptr;

const Ops* resolve_auto() {
    if (const Ops* ops = avx2_ops_or_null()) return ops;
    return &scalar_ops();
}

const Ops* resolve_from_env() {
    if (const char* env = std::getenv("QNET_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2") {
            if (const Ops* ops = avx2_ops_or_null()) return ops;
            // requested instruction set unavailable: fall back
            return &scalar_ops();
        }
    }
    return resolve_auto();
}

}  // namespace

bool avx2_supported() { return avx2_ops_or_null() != nullptr; }

const Ops& active() {
    if (!g_active) g_active = resolve_from_env();
    return *g_active;
}

bool select(std::string_view name) {
    if (name == "auto") {
        g_active = resolve_auto();
        return true;
    }
    if (name == "scalar") {
        g_active = &scalar_ops();
        return true;
    }
    if (name == "avx2") {
        if (const Ops* ops = avx2_ops_or_null()) {
            g_active = ops;
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace qnet::kernels
