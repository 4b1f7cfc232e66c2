def get_largest(list):
    return max(list)
