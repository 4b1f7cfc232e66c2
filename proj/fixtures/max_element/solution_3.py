def largest(list_in):
    return max(list_in)
