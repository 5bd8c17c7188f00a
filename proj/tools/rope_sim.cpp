// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>

int main() {
    std::puts("rope_sim: not wired up yet");
    return 1;
}
