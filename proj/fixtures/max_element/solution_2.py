def find_largest(list_of_numbers):
    largest = list_of_numbers[0]
    for number in list_of_numbers[1:]:
        if number > largest:
            largest = number
    return largest
