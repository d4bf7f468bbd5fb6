#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace propfox {

/// Worker count: hardware concurrency, capped by PROPFOX_THREADS when set.
inline std::size_t thread_count()
{
	std::size_t n = std::max(1u, std::thread::hardware_concurrency());
	if (const char *env = std::getenv("PROPFOX_THREADS"))
	{
		char *end = nullptr;
		long cap = std::strtol(env, &end, 10);
		if (end != env && cap >= 1)
			n = std::min(n, static_cast<std::size_t>(cap));
	}
	return n;
}

/// Calls fn(k) for k in [0, count). Callers write results by index, so the
/// outcome does not depend on scheduling. If several calls throw, the
/// exception from the smallest index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn &&fn)
{
	std::size_t workers = std::min(thread_count(), count);
	if (workers <= 1)
	{
		for (std::size_t k = 0; k < count; ++k)
			fn(k);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::vector<std::exception_ptr> errors(count);
	auto work = [&] {
		for (std::size_t k = next++; k < count; k = next++)
		{
			try
			{
				fn(k);
			}
			catch (...)
			{
				errors[k] = std::current_exception();
			}
		}
	};
	std::vector<std::thread> pool;
	pool.reserve(workers - 1);
	for (std::size_t t = 1; t < workers; ++t)
		pool.emplace_back(work);
	work();
	for (auto &t : pool)
		t.join();
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
}

} // namespace propfox
