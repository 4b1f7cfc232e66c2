def largest_element(list1):
    largest = list1[0]
    for item in list1:
        if item > largest:
            largest = item
    return largest
