#include <iostream>

#include "motzkin/verify.hpp"

int main()
{
    int failed = 0;
    for (int id = 1; id <= motzkin::criterion_count; ++id) {
        auto r = motzkin::run_criterion(id, motzkin::Scale::full);
        std::cout << motzkin::format_result(r) << std::endl;
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
