import ray


def init(*args, **kwargs):
    ray.init(*args, **kwargs)
